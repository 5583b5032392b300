#include "borsuk/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <vector>

#include "borsuk/abelian.hpp"
#include "borsuk/capacity.hpp"
#include "borsuk/errors.hpp"
#include "borsuk/expr.hpp"
#include "borsuk/homology.hpp"
#include "borsuk/oracle.hpp"
#include "borsuk/spaces.hpp"

namespace borsuk::cli {

namespace {

using Json = nlohmann::ordered_json;

const char* kind_name(CapacityKind kind) {
    switch (kind) {
        case CapacityKind::Exact: return "exact";
        case CapacityKind::CountOnly: return "count_only";
        case CapacityKind::UpperBound: return "upper_bound";
    }
    return "";
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

Json capacity_json(const std::string& input, const SpaceDescriptor& normalized,
                   const CapacityResult& result) {
    Json doc;
    doc["input"] = input;
    doc["normalized"] = render_descriptor(normalized);
    doc["capacity"] = {{"value", result.value}, {"kind", kind_name(result.kind)}};
    if (result.dominated) {
        Json list = Json::array();
        for (const SpaceDescriptor& d : *result.dominated) list.push_back(render_descriptor(d));
        doc["dominated"] = std::move(list);
    }
    return doc;
}

void capacity_text(std::ostream& out, const CapacityResult& result) {
    switch (result.kind) {
        case CapacityKind::Exact:
            out << "capacity = " << result.value << " (exact)\n";
            out << "dominated (" << result.dominated->size() << "):\n";
            break;
        case CapacityKind::CountOnly:
            out << "capacity = " << result.value << " (count only)\n";
            break;
        case CapacityKind::UpperBound:
            out << "capacity <= " << result.value << " (upper bound)\n";
            out << "candidates (" << result.dominated->size() << "):\n";
            break;
    }
    if (result.dominated) {
        for (const SpaceDescriptor& d : *result.dominated) {
            out << "  " << render_descriptor(d) << "\n";
        }
    }
}

int run_capacity(const CapacityCommand& cmd, const Options& options, std::ostream& out) {
    SpaceDescriptor parsed = parse_expression(cmd.expr);
    SpaceDescriptor normalized = normalize(parsed);
    CapacityResult result = capacity_of(parsed);
    if (options.json) {
        emit(out, capacity_json(cmd.expr, normalized, result));
        return 0;
    }
    out << "input:      " << cmd.expr << "\n";
    out << "normalized: " << render_descriptor(normalized) << "\n";
    capacity_text(out, result);
    return 0;
}

int run_dominated(const DominatedCommand& cmd, const Options& options, std::ostream& out) {
    SpaceDescriptor parsed = parse_expression(cmd.expr);
    SpaceDescriptor normalized = normalize(parsed);
    CapacityResult result = capacity_of(parsed);
    if (result.kind == CapacityKind::CountOnly) {
        // Same failure the library reports, routed through exit code 3.
        enumerate_dominated(parsed);
    }
    if (options.json) {
        emit(out, capacity_json(cmd.expr, normalized, result));
        return 0;
    }
    out << "input:      " << cmd.expr << "\n";
    out << "normalized: " << render_descriptor(normalized) << "\n";
    capacity_text(out, result);
    return 0;
}

int run_homology(const HomologyCommand& cmd, const Options& options, std::ostream& out) {
    SpaceDescriptor parsed = parse_expression(cmd.expr);
    SpaceDescriptor normalized = normalize(parsed);
    const int max_dim = cmd.max_dim ? *cmd.max_dim : default_max_dim(normalized);
    GradedGroup h = homology_of(normalized, max_dim);
    if (options.json) {
        Json doc;
        doc["input"] = cmd.expr;
        doc["normalized"] = render_descriptor(normalized);
        Json table = Json::object();
        for (int i = 0; i <= max_dim; ++i) table[std::to_string(i)] = h.at(i).to_string();
        doc["homology"] = std::move(table);
        doc["truncated_above"] =
            h.truncated_above ? Json(*h.truncated_above) : Json(nullptr);
        emit(out, doc);
        return 0;
    }
    out << "input:      " << cmd.expr << "\n";
    out << "normalized: " << render_descriptor(normalized) << "\n";
    for (int i = 0; i <= max_dim; ++i) {
        out << "H_" << i << "  " << h.at(i).to_string() << "\n";
    }
    if (h.truncated_above) out << "(truncated above " << *h.truncated_above << ")\n";
    return 0;
}

int run_group(const GroupCommand& cmd, const Options& options, std::ostream& out) {
    AbelianGroup g = parse_group_literal(cmd.literal);
    std::vector<Int> factors = invariant_factors(g);
    std::vector<AbelianGroup> summands = summands_up_to_iso(g);
    if (options.json) {
        Json doc;
        doc["input"] = cmd.literal;
        doc["canonical"] = g.to_string();
        Json fj = Json::array();
        for (const Int& m : factors) fj.push_back(m.str());
        doc["invariant_factors"] = std::move(fj);
        Json sj = Json::array();
        for (const AbelianGroup& s : summands) sj.push_back(s.to_string());
        doc["summands"] = std::move(sj);
        doc["count"] = count_summands(g);
        emit(out, doc);
        return 0;
    }
    out << "input:             " << cmd.literal << "\n";
    out << "canonical:         " << g.to_string() << "\n";
    out << "invariant factors:";
    if (factors.empty()) out << " none";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        out << (i == 0 ? " " : " | ") << factors[i];
    }
    out << "\n";
    out << "summands (" << count_summands(g) << "):\n";
    for (const AbelianGroup& s : summands) out << "  " << s.to_string() << "\n";
    return 0;
}

// Every multiset of prime powers with product <= max_order, as cyclic orders,
// sorted by group order and then canonically.
std::vector<std::vector<int>> groups_up_to_order(int max_order) {
    std::vector<int> prime_powers;
    for (int n = 2; n <= max_order; ++n) {
        if (factorize(n).size() == 1) prime_powers.push_back(n);
    }
    std::vector<std::vector<int>> result;
    std::vector<int> current;
    auto recurse = [&](auto&& self, std::size_t next, long long budget) -> void {
        result.push_back(current);
        for (std::size_t i = next; i < prime_powers.size(); ++i) {
            if (prime_powers[i] > budget) break;
            current.push_back(prime_powers[i]);
            self(self, i, budget / prime_powers[i]);
            current.pop_back();
        }
    };
    recurse(recurse, 0, max_order);
    std::sort(result.begin(), result.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  long long oa = 1, ob = 1;
                  for (int x : a) oa *= x;
                  for (int x : b) ob *= x;
                  if (oa != ob) return oa < ob;
                  return a < b;
              });
    return result;
}

int run_oracle_verify(const OracleVerifyCommand& cmd, const Options& options, std::ostream& out) {
    int checked = 0;
    std::vector<std::string> mismatches;
    Json lines = Json::array();
    for (const std::vector<int>& orders : groups_up_to_order(cmd.max_order)) {
        std::vector<PrimePower> torsion;
        for (int n : orders) {
            auto factors = factorize(n);
            torsion.push_back(factors.front());
        }
        AbelianGroup group(0, torsion);

        std::vector<AbelianGroup> fast = summands_up_to_iso(group);
        std::vector<AbelianGroup> brute;
        if (orders.empty()) {
            brute.push_back(AbelianGroup::zero());  // trivial group, no cyclic factors
        } else {
            brute = bruteforce_summand_classes(ExplicitFiniteGroup(orders));
        }
        const bool ok = fast == brute;
        ++checked;
        if (!ok) mismatches.push_back(group.to_string());
        if (options.json) continue;
        out << (ok ? "PASS" : "FAIL") << "  " << group.to_string() << "  classes: " << fast.size()
            << "\n";
        if (!ok) {
            out << "      brute force:";
            for (const AbelianGroup& c : brute) out << " " << c.to_string() << ";";
            out << "\n";
        }
    }
    if (options.json) {
        Json doc;
        doc["max_order"] = cmd.max_order;
        doc["groups_checked"] = checked;
        doc["mismatches"] = mismatches;
        doc["ok"] = mismatches.empty();
        emit(out, doc);
    } else {
        out << "checked " << checked << " groups of order <= " << cmd.max_order << ": "
            << (mismatches.empty() ? "all match" : std::to_string(mismatches.size()) +
                                                       " mismatches")
            << "\n";
    }
    return mismatches.empty() ? 0 : 1;
}

}  // namespace

int run(const Command& command, const Options& options, std::ostream& out, std::ostream& err) {
    try {
        return std::visit(
            [&](const auto& cmd) -> int {
                using T = std::decay_t<decltype(cmd)>;
                if constexpr (std::is_same_v<T, CapacityCommand>) {
                    return run_capacity(cmd, options, out);
                } else if constexpr (std::is_same_v<T, DominatedCommand>) {
                    return run_dominated(cmd, options, out);
                } else if constexpr (std::is_same_v<T, HomologyCommand>) {
                    return run_homology(cmd, options, out);
                } else if constexpr (std::is_same_v<T, GroupCommand>) {
                    return run_group(cmd, options, out);
                } else {
                    return run_oracle_verify(cmd, options, out);
                }
            },
            command);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidDescriptor& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedHomology& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const EnumerationUnavailable& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const OrderTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace borsuk::cli
