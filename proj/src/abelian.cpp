#include "borsuk/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace borsuk {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<PrimePower> factorize(Int n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
    std::vector<PrimePower> result;
    auto strip = [&](const Int& d) {
        int a = 0;
        while (n % d == 0) {
            n /= d;
            ++a;
        }
        if (a > 0) result.emplace_back(d, a);
    };
    strip(2);
    for (Int d = 3; d * d <= n; d += 2) strip(d);
    if (n > 1) result.emplace_back(n, 1);
    return result;
}

PrimePower::PrimePower(Int prime, int exponent) : p(std::move(prime)), a(exponent) {
    if (!is_prime(p)) throw std::invalid_argument("PrimePower: base is not prime");
    if (a < 1) throw std::invalid_argument("PrimePower: exponent must be >= 1");
}

Int PrimePower::value() const {
    Int v = 1;
    for (int i = 0; i < a; ++i) v *= p;
    return v;
}

AbelianGroup::AbelianGroup(long long free_rank, std::vector<PrimePower> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    if (free_rank_ < 0) throw std::invalid_argument("AbelianGroup: negative free rank");
    std::sort(torsion_.begin(), torsion_.end());
}

AbelianGroup AbelianGroup::zero() { return AbelianGroup(); }

AbelianGroup AbelianGroup::free(long long rank) { return AbelianGroup(rank, {}); }

AbelianGroup AbelianGroup::cyclic(const Int& n) {
    if (n < 1) throw std::invalid_argument("AbelianGroup::cyclic: order must be >= 1");
    return AbelianGroup(0, factorize(n));
}

bool AbelianGroup::is_finite_cyclic() const {
    if (free_rank_ != 0) return false;
    for (std::size_t i = 1; i < torsion_.size(); ++i) {
        if (torsion_[i].p == torsion_[i - 1].p) return false;
    }
    return true;
}

Int AbelianGroup::torsion_order() const {
    Int n = 1;
    for (const auto& f : torsion_) n *= f.value();
    return n;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " + ";
        first = false;
    };
    if (free_rank_ == 1) {
        sep();
        out << "Z";
    } else if (free_rank_ > 1) {
        sep();
        out << "Z^" << free_rank_;
    }
    for (const Int& m : invariant_factors(*this)) {
        sep();
        out << "Z/" << m;
    }
    return out.str();
}

int compare(const AbelianGroup& x, const AbelianGroup& y) {
    if (x.free_rank() != y.free_rank()) return x.free_rank() < y.free_rank() ? -1 : 1;
    Int ox = x.torsion_order(), oy = y.torsion_order();
    if (ox != oy) return ox < oy ? -1 : 1;
    const auto& tx = x.torsion();
    const auto& ty = y.torsion();
    for (std::size_t i = 0; i < tx.size() && i < ty.size(); ++i) {
        if (tx[i].p != ty[i].p) return tx[i].p < ty[i].p ? -1 : 1;
        if (tx[i].a != ty[i].a) return tx[i].a < ty[i].a ? -1 : 1;
    }
    if (tx.size() != ty.size()) return tx.size() < ty.size() ? -1 : 1;
    return 0;
}

PresentationMatrix::PresentationMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

PresentationMatrix PresentationMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                                                 std::size_t cols) {
    PresentationMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("PresentationMatrix: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

PresentationMatrix PresentationMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return PresentationMatrix(0, 0);
    return from_rows(rows, rows[0].size());
}

namespace {

// Elementary operations applied to the working matrix and mirrored into the
// unimodular transforms.
struct SmithWorker {
    PresentationMatrix m;
    PresentationMatrix u;  // tracks row ops
    PresentationMatrix v;  // tracks col ops

    explicit SmithWorker(const PresentationMatrix& input)
        : m(input), u(input.rows(), input.rows()), v(input.cols(), input.cols()) {
        for (std::size_t i = 0; i < u.rows(); ++i) u.at(i, i) = 1;
        for (std::size_t j = 0; j < v.rows(); ++j) v.at(j, j) = 1;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }

    // row[a] += c * row[b]
    void add_row(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) += c * u.at(b, j);
    }

    // col[a] += c * col[b]
    void add_col(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) += c * v.at(i, b);
    }

    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    }

    // Move the submatrix entry of minimal nonzero absolute value to (t, t).
    // Returns false when the submatrix is zero.
    bool pull_min_pivot(std::size_t t) {
        std::size_t bi = 0, bj = 0;
        Int best = 0;
        for (std::size_t i = t; i < m.rows(); ++i) {
            for (std::size_t j = t; j < m.cols(); ++j) {
                if (m.at(i, j) == 0) continue;
                Int a = abs(m.at(i, j));
                if (best == 0 || a < best) {
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best == 0) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }
};

}  // namespace

SmithDecomposition smith_decompose(const PresentationMatrix& input) {
    SmithWorker w(input);
    const std::size_t r = std::min(input.rows(), input.cols());

    for (std::size_t t = 0; t < r; ++t) {
        if (!w.pull_min_pivot(t)) break;
        bool stable = false;
        while (!stable) {
            stable = true;
            // Clear column t. A nonzero remainder is strictly smaller than
            // the pivot, so swapping it up makes progress.
            for (std::size_t i = t + 1; i < w.m.rows(); ++i) {
                if (w.m.at(i, t) == 0) continue;
                Int q = w.m.at(i, t) / w.m.at(t, t);
                w.add_row(i, t, -q);
                if (w.m.at(i, t) != 0) {
                    w.swap_rows(t, i);
                    stable = false;
                }
            }
            if (!stable) continue;
            // Clear row t.
            for (std::size_t j = t + 1; j < w.m.cols(); ++j) {
                if (w.m.at(t, j) == 0) continue;
                Int q = w.m.at(t, j) / w.m.at(t, t);
                w.add_col(j, t, -q);
                if (w.m.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    stable = false;
                }
            }
            if (!stable) continue;
            // Pivot must divide everything that is left; pull in a witness
            // row if it does not.
            for (std::size_t i = t + 1; i < w.m.rows() && stable; ++i) {
                for (std::size_t j = t + 1; j < w.m.cols(); ++j) {
                    if (w.m.at(i, j) % w.m.at(t, t) != 0) {
                        w.add_row(t, i, 1);
                        stable = false;
                        break;
                    }
                }
            }
        }
        if (w.m.at(t, t) < 0) w.negate_row(t);
    }

    SmithDecomposition d{{}, std::move(w.u), std::move(w.v)};
    d.diagonal.reserve(r);
    for (std::size_t t = 0; t < r; ++t) d.diagonal.push_back(w.m.at(t, t));
    return d;
}

std::vector<Int> smith_normal_form(const PresentationMatrix& m) {
    return smith_decompose(m).diagonal;
}

std::vector<std::vector<Int>> kernel_basis(const PresentationMatrix& m) {
    SmithDecomposition d = smith_decompose(m);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j < d.diagonal.size() && d.diagonal[j] != 0) continue;
        std::vector<Int> vec(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) vec[i] = d.right.at(i, j);
        basis.push_back(std::move(vec));
    }
    return basis;
}

AbelianGroup group_from_presentation(const PresentationMatrix& m) {
    std::vector<Int> diag = smith_normal_form(m);
    long long nonzero = 0;
    std::vector<PrimePower> torsion;
    for (const Int& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) {
            for (auto& f : factorize(d)) torsion.push_back(std::move(f));
        }
    }
    return AbelianGroup(static_cast<long long>(m.cols()) - nonzero, std::move(torsion));
}

std::vector<Int> invariant_factors(const AbelianGroup& a) {
    // j-th largest exponent of each prime lands in the j-th largest factor.
    std::map<Int, std::vector<int>> exponents;
    for (const auto& f : a.torsion()) exponents[f.p].push_back(f.a);
    std::size_t count = 0;
    for (auto& [p, exps] : exponents) {
        std::sort(exps.rbegin(), exps.rend());
        count = std::max(count, exps.size());
    }
    std::vector<Int> factors(count, 1);
    for (const auto& [p, exps] : exponents) {
        for (std::size_t j = 0; j < exps.size(); ++j) {
            Int pw = 1;
            for (int i = 0; i < exps[j]; ++i) pw *= p;
            factors[count - 1 - j] *= pw;
        }
    }
    return factors;
}

bool is_isomorphic(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<PrimePower> torsion = a.torsion();
    torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
    return AbelianGroup(a.free_rank() + b.free_rank(), std::move(torsion));
}

namespace {

// Distinct torsion factors with multiplicities, preserving canonical order.
std::vector<std::pair<PrimePower, int>> torsion_multiplicities(const AbelianGroup& a) {
    std::vector<std::pair<PrimePower, int>> result;
    for (const auto& f : a.torsion()) {
        if (!result.empty() && result.back().first == f) {
            ++result.back().second;
        } else {
            result.emplace_back(f, 1);
        }
    }
    return result;
}

}  // namespace

std::vector<AbelianGroup> summands_up_to_iso(const AbelianGroup& a) {
    auto distinct = torsion_multiplicities(a);
    std::vector<AbelianGroup> result;
    // Odometer over per-factor multiplicities; every setting is a distinct
    // sub-multiset, hence a distinct canonical form.
    std::vector<int> take(distinct.size(), 0);
    while (true) {
        std::vector<PrimePower> torsion;
        for (std::size_t i = 0; i < distinct.size(); ++i) {
            for (int k = 0; k < take[i]; ++k) torsion.push_back(distinct[i].first);
        }
        for (long long s = 0; s <= a.free_rank(); ++s) {
            result.emplace_back(s, torsion);
        }
        std::size_t i = 0;
        for (; i < take.size(); ++i) {
            if (take[i] < distinct[i].second) {
                ++take[i];
                break;
            }
            take[i] = 0;
        }
        if (i == take.size()) break;
    }
    std::sort(result.begin(), result.end(),
              [](const AbelianGroup& x, const AbelianGroup& y) { return compare(x, y) < 0; });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

long long count_summands(const AbelianGroup& a) {
    long long count = a.free_rank() + 1;
    for (const auto& [factor, mult] : torsion_multiplicities(a)) {
        count *= mult + 1;
    }
    return count;
}

AbelianGroup tensor(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<PrimePower> torsion;
    for (long long i = 0; i < a.free_rank(); ++i) {
        for (const auto& f : b.torsion()) torsion.push_back(f);
    }
    for (long long i = 0; i < b.free_rank(); ++i) {
        for (const auto& f : a.torsion()) torsion.push_back(f);
    }
    for (const auto& f : a.torsion()) {
        for (const auto& g : b.torsion()) {
            if (f.p == g.p) torsion.emplace_back(f.p, std::min(f.a, g.a));
        }
    }
    return AbelianGroup(a.free_rank() * b.free_rank(), std::move(torsion));
}

AbelianGroup tor(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<PrimePower> torsion;
    for (const auto& f : a.torsion()) {
        for (const auto& g : b.torsion()) {
            if (f.p == g.p) torsion.emplace_back(f.p, std::min(f.a, g.a));
        }
    }
    return AbelianGroup(0, std::move(torsion));
}

namespace {

struct LiteralScanner {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw ParseError("expected a number at offset " + std::to_string(start), start,
                             {"number"});
        return Int(text.substr(start, pos - start));
    }
};

}  // namespace

AbelianGroup parse_group_literal(const std::string& text) {
    LiteralScanner s{text};
    AbelianGroup result;
    bool first = true;
    while (true) {
        if (s.eof()) {
            throw ParseError("expected a group term at offset " + std::to_string(s.pos), s.pos,
                             {"Z", "0"});
        }
        if (s.accept('0')) {
            // zero summand, nothing to add
        } else if (s.accept('Z')) {
            if (s.accept('^')) {
                Int k = s.number();
                if (k > 1'000'000)
                    throw InvalidDescriptor("free rank too large: " + k.str());
                result = direct_sum(result, AbelianGroup::free(k.convert_to<long long>()));
            } else if (s.accept('/')) {
                std::size_t at = s.pos;
                Int n = s.number();
                if (n < 1)
                    throw ParseError("cyclic order must be >= 1 at offset " + std::to_string(at),
                                     at, {"positive number"});
                result = direct_sum(result, AbelianGroup::cyclic(n));
            } else {
                result = direct_sum(result, AbelianGroup::free(1));
            }
        } else {
            throw ParseError("unexpected character '" + std::string(1, s.peek()) +
                                 "' at offset " + std::to_string(s.pos),
                             s.pos, first ? std::vector<std::string>{"Z", "0"}
                                          : std::vector<std::string>{"Z", "0", "+"});
        }
        first = false;
        if (!s.accept('+')) break;
    }
    if (!s.eof()) {
        throw ParseError("trailing input at offset " + std::to_string(s.pos), s.pos, {"+", "end"});
    }
    return result;
}

std::string render_group(const AbelianGroup& a) { return a.to_string(); }

}  // namespace borsuk
