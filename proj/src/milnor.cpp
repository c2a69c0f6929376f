#include "griff/milnor.hpp"

#include <stdexcept>

#include "griff/parallel.hpp"

namespace griff {

HomogeneousPoly::HomogeneousPoly(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
    if (num_vars < 1) throw std::domain_error("HomogeneousPoly: need at least one variable");
    if (degree < 1) throw std::domain_error("HomogeneousPoly: degree must be positive");
}

void HomogeneousPoly::add_term(const ExponentVec& exponents, const Rational& coeff) {
    if (static_cast<int>(exponents.size()) != num_vars_)
        throw std::invalid_argument("HomogeneousPoly: exponent vector has wrong length");
    int total = 0;
    for (int e : exponents) {
        if (e < 0) throw std::invalid_argument("HomogeneousPoly: negative exponent");
        total += e;
    }
    if (total != degree_) throw std::invalid_argument("HomogeneousPoly: term degree mismatch (input not homogeneous)");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HomogeneousPoly HomogeneousPoly::scaled(const Rational& factor) const {
    HomogeneousPoly out(num_vars_, degree_);
    if (factor.is_zero()) return out;
    for (const auto& [exps, coeff] : terms_) out.add_term(exps, coeff * factor);
    return out;
}

std::string HomogeneousPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [exps, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += coeff.to_string();
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
        }
    }
    return out;
}

HomogeneousPoly fermat(int num_vars, int delta) {
    if (delta < 2) throw std::domain_error("fermat: delta must be >= 2");
    HomogeneousPoly F(num_vars, delta);
    for (int i = 0; i < num_vars; ++i) {
        ExponentVec exps(static_cast<size_t>(num_vars), 0);
        exps[static_cast<size_t>(i)] = delta;
        F.add_term(exps, Rational(1));
    }
    return F;
}

std::vector<HomogeneousPoly> jacobian_generators(const HomogeneousPoly& F) {
    std::vector<HomogeneousPoly> gens;
    gens.reserve(static_cast<size_t>(F.num_vars()));
    for (int v = 0; v < F.num_vars(); ++v) {
        HomogeneousPoly g(F.num_vars(), F.degree() - 1);
        for (const auto& [exps, coeff] : F.terms()) {
            const int e = exps[static_cast<size_t>(v)];
            if (e == 0) continue;
            ExponentVec d = exps;
            --d[static_cast<size_t>(v)];
            g.add_term(d, coeff * Rational(e));
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

std::vector<ExponentVec> monomials_of_degree(int n, int k) {
    std::vector<ExponentVec> out;
    ExponentVec cur(static_cast<size_t>(n), 0);
    // Recursive distribution of degree k over n slots, lexicographic.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n - 1) {
            cur[static_cast<size_t>(var)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
        cur[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0, k);
    return out;
}

long long matrix_rank(std::vector<std::vector<Integer>> rows, size_t cols) {
    const size_t nrows = rows.size();
    size_t rank = 0;
    Integer prev(1);
    for (size_t col = 0; col < cols && rank < nrows; ++col) {
        size_t pivot = rank;
        while (pivot < nrows && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == nrows) continue;
        std::swap(rows[rank], rows[pivot]);
        const Integer& p = rows[rank][col];
        for (size_t i = rank + 1; i < nrows; ++i) {
            if (rows[i][col].is_zero()) {
                // Still renormalize by the Bareiss identity so later exact
                // divisions stay valid.
                for (size_t j = col + 1; j < cols; ++j) {
                    if (rows[i][j].is_zero()) continue;
                    auto [q, r] = Integer::divmod(p * rows[i][j], prev);
                    if (!r.is_zero()) throw std::logic_error("matrix_rank: non-exact division");
                    rows[i][j] = q;
                }
                continue;
            }
            for (size_t j = col + 1; j < cols; ++j) {
                auto [q, r] = Integer::divmod(p * rows[i][j] - rows[i][col] * rows[rank][j], prev);
                if (!r.is_zero()) throw std::logic_error("matrix_rank: non-exact division");
                rows[i][j] = q;
            }
            rows[i][col] = Integer();
        }
        prev = p;
        ++rank;
    }
    return static_cast<long long>(rank);
}

namespace {

// Rows of the degree-k multiplication map: each Jacobian generator times each
// monomial of degree k - deg(g), written in the degree-k monomial basis and
// scaled to integer entries.
long long jacobian_rank_in_degree(const std::vector<HomogeneousPoly>& gens, int num_vars, int k) {
    if (gens.empty()) return 0;
    const int gen_degree = gens.front().degree();
    if (k < gen_degree) return 0;

    const std::vector<ExponentVec> basis = monomials_of_degree(num_vars, k);
    std::map<ExponentVec, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    const std::vector<ExponentVec> multipliers = monomials_of_degree(num_vars, k - gen_degree);
    std::vector<std::vector<Integer>> rows;
    rows.reserve(gens.size() * multipliers.size());
    for (const HomogeneousPoly& g : gens) {
        if (g.is_zero()) continue;
        for (const ExponentVec& mu : multipliers) {
            std::vector<Rational> row(basis.size(), Rational(0));
            Integer denom_lcm(1);
            for (const auto& [exps, coeff] : g.terms()) {
                ExponentVec prod = exps;
                for (size_t v = 0; v < prod.size(); ++v) prod[v] += mu[v];
                row[index.at(prod)] = coeff;
                denom_lcm = Integer::lcm(denom_lcm, coeff.den());
            }
            std::vector<Integer> int_row(basis.size());
            for (size_t j = 0; j < row.size(); ++j) {
                int_row[j] = row[j].num() * (denom_lcm / row[j].den());
            }
            rows.push_back(std::move(int_row));
        }
    }
    if (rows.empty()) return 0;
    return matrix_rank(std::move(rows), basis.size());
}

Integer monomial_count(int n, int k) { return binomial(k + n - 1, n - 1); }

}  // namespace

GradedQuotientDims hilbert_dims(const HomogeneousPoly& F, int threads) {
    const int n = F.num_vars();
    const int delta = F.degree();
    if (delta < 2) throw std::domain_error("hilbert_dims: degree must be >= 2");
    GradedQuotientDims out;
    out.socle_bound = n * (delta - 2);
    out.dims.assign(static_cast<size_t>(out.socle_bound) + 2, 0);

    const std::vector<HomogeneousPoly> gens = jacobian_generators(F);
    indexed_for(static_cast<long long>(out.dims.size()), threads, [&](long long k) {
        const long long total = monomial_count(n, static_cast<int>(k)).to_long_long();
        out.dims[static_cast<size_t>(k)] = total - jacobian_rank_in_degree(gens, n, static_cast<int>(k));
    });
    return out;
}

MilnorResult milnor_number(const HomogeneousPoly& F, int threads) {
    MilnorResult result;
    result.dims = hilbert_dims(F, threads);
    result.isolated = result.dims.dims.back() == 0;
    if (result.isolated) {
        Integer total;
        for (size_t k = 0; k + 1 < result.dims.dims.size(); ++k) total += Integer(result.dims.dims[k]);
        result.milnor_number = total;
    }
    return result;
}

bool is_smooth_cone(const HomogeneousPoly& F, int threads) {
    return milnor_number(F, threads).isolated;
}

}  // namespace griff
