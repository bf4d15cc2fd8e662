#include "lz76/identities.hpp"

#include <sstream>

#include "lz76/errors.hpp"

namespace lz76 {

namespace {

// tables[i] must hold length i+1, all over one alphabet.
void require_contiguous(std::span<const CountTable> tables) {
    if (tables.empty())
        throw invalid_input_error("at least one count table is required");
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (tables[i].length() != i + 1) {
            std::ostringstream msg;
            msg << "tables must cover lengths 1..N contiguously; slot " << i
                << " holds length " << tables[i].length();
            throw invalid_input_error(msg.str());
        }
        if (tables[i].alphabet_size() != tables[0].alphabet_size())
            throw invalid_input_error("tables mix different alphabet sizes");
    }
}

std::vector<big_rational> cdf_vector(const CountTable& t) {
    std::vector<big_rational> cdf(t.length());
    for (std::size_t k = 1; k <= t.length(); ++k) cdf[k - 1] = t.cdf(k);
    return cdf;
}

} // namespace

IdentityResult verify_step_recurrence(const CountTable& t, const CountTable& t_next) {
    if (t_next.alphabet_size() != t.alphabet_size())
        throw invalid_input_error("step recurrence requires tables over the same alphabet");
    if (t_next.length() != t.length() + 1)
        throw invalid_input_error("step recurrence requires consecutive lengths");

    IdentityResult result{"step_recurrence", true, true, ""};
    const unsigned n = t.length();
    const big_int alpha = t.alphabet_size();
    for (std::size_t k = 1; k <= std::size_t{n} + 2; ++k) {
        const big_int lhs = t_next.count(k + 1);
        const big_int rhs = alpha * (big_int(t.count(k + 1)) - big_int(t.exact_count(k + 1)) +
                                     big_int(t.exact_count(k)));
        if (lhs != rhs) {
            result.passed = false;
            std::ostringstream msg;
            msg << "n=" << n << ", k=" << k << ": N_" << n + 1 << "(" << k + 1 << ") = " << lhs
                << " but alpha*(N_" << n << "(" << k + 1 << ") - N_" << n << "((" << k + 1
                << ")_e) + N_" << n << "(" << k << "_e)) = " << rhs;
            result.detail = msg.str();
            return result;
        }
    }
    std::ostringstream msg;
    msg << "N_{n+1}(k+1) = alpha*(N_n(k+1) - N_n((k+1)_e) + N_n(k_e)) holds for n=" << n
        << ", k=1.." << n + 2;
    result.detail = msg.str();
    return result;
}

IdentityResult verify_cdf_exact_mass_identity(std::span<const CountTable> tables) {
    require_contiguous(tables);
    const std::size_t N = tables.size();
    IdentityResult result{"cdf_exact_mass_identity", true, true, ""};
    if (N < 2) {
        result.detail = "vacuous: needs tables for at least two lengths";
        return result;
    }
    for (std::size_t n = 1; n + 1 <= N; ++n) {
        for (std::size_t k = 1; k <= N + 1; ++k) {
            const big_rational lhs = tables[n].cdf(k); // length n+1
            big_rational mass = 0;
            for (std::size_t r = 1; r <= n; ++r) mass += tables[r - 1].exact_pmf(k);
            const big_rational rhs = big_rational(1) - mass;
            if (lhs != rhs) {
                result.passed = false;
                std::ostringstream msg;
                msg << "n=" << n << ", k=" << k << ": P_" << n + 1 << "(C<=" << k
                    << ") = " << lhs << " but 1 - sum_{r=1.." << n << "} P_r(" << k
                    << "_e) = " << rhs;
                result.detail = msg.str();
                return result;
            }
        }
    }
    std::ostringstream msg;
    msg << "P_{n+1}(C_{n+1}<=k) = 1 - sum_{r=1..n} P_r(k_e) holds for n=1.." << N - 1
        << ", k=1.." << N + 1;
    result.detail = msg.str();
    return result;
}

std::vector<big_rational> extend_cdf(const CountTable& t, std::span<const big_rational> cdf) {
    const std::size_t n = t.length();
    if (cdf.size() != n)
        throw invalid_input_error("cdf must provide exactly k = 1..n for the table's length");
    std::vector<big_rational> next(n + 1);
    for (std::size_t k = 1; k <= n + 1; ++k) {
        const big_rational base = (k <= n) ? cdf[k - 1] : big_rational(1);
        next[k - 1] = base - t.exact_pmf(k);
    }
    return next;
}

big_rational exact_mass_partial_sum(std::span<const CountTable> tables, std::size_t k) {
    require_contiguous(tables);
    if (k < 1) throw invalid_input_error("complexity class k must be >= 1");
    big_rational sum = 0;
    for (const auto& t : tables) sum += t.exact_pmf(k);
    return sum;
}

IdentityResult verify_cdf_extension(std::span<const CountTable> tables) {
    require_contiguous(tables);
    const std::size_t N = tables.size();
    IdentityResult result{"cdf_one_step_extension", true, true, ""};
    if (N < 2) {
        result.detail = "vacuous: needs tables for at least two lengths";
        return result;
    }
    for (std::size_t n = 1; n + 1 <= N; ++n) {
        const auto extended = extend_cdf(tables[n - 1], cdf_vector(tables[n - 1]));
        for (std::size_t k = 1; k <= n + 1; ++k) {
            const big_rational direct = tables[n].cdf(k);
            if (extended[k - 1] != direct) {
                result.passed = false;
                std::ostringstream msg;
                msg << "n=" << n << ", k=" << k << ": extension gives " << extended[k - 1]
                    << " but direct enumeration gives " << direct;
                result.detail = msg.str();
                return result;
            }
        }
    }
    std::ostringstream msg;
    msg << "P_{n+1}(C_{n+1}<=k) = P_n(C_n<=k) - P_n(k_e) matches direct enumeration for n=1.."
        << N - 1;
    result.detail = msg.str();
    return result;
}

IdentityResult verify_cdf_monotone_in_length(std::span<const CountTable> tables) {
    require_contiguous(tables);
    const std::size_t N = tables.size();
    IdentityResult result{"cdf_monotone_in_length", true, true, ""};
    if (N < 2) {
        result.detail = "vacuous: needs tables for at least two lengths";
        return result;
    }
    for (std::size_t k = 1; k <= N; ++k) {
        for (std::size_t n = 2; n <= N; ++n) {
            const big_rational shorter = tables[n - 2].cdf(k);
            const big_rational longer = tables[n - 1].cdf(k);
            if (longer > shorter) {
                result.passed = false;
                std::ostringstream msg;
                msg << "k=" << k << ": P_" << n << "(C<=" << k << ") = " << longer << " > P_"
                    << n - 1 << "(C<=" << k << ") = " << shorter;
                result.detail = msg.str();
                return result;
            }
        }
    }
    std::ostringstream msg;
    msg << "P_{n+1}(C_{n+1}<=k) <= P_n(C_n<=k) holds for n=1.." << N - 1 << ", k=1.." << N;
    result.detail = msg.str();
    return result;
}

IdentityResult verify_tail_mass_telescoping(std::span<const CountTable> tables) {
    require_contiguous(tables);
    const std::size_t N = tables.size();
    IdentityResult result{"tail_mass_telescoping", true, true, ""};
    if (N < 2) {
        result.detail = "vacuous: needs tables for at least two lengths";
        return result;
    }
    for (std::size_t n = 1; n + 1 <= N; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            big_rational lhs = 0;
            for (std::size_t s = 1; s <= n + 1 - k; ++s) lhs += tables[n].pmf(k + s);
            big_rational rhs = 0;
            for (std::size_t r = 1; r <= n; ++r) rhs += tables[r - 1].exact_pmf(k);
            if (lhs != rhs) {
                result.passed = false;
                std::ostringstream msg;
                msg << "n=" << n << ", k=" << k << ": sum_{s=1.." << n + 1 - k << "} P_"
                    << n + 1 << "(k+s) = " << lhs << " but sum_{r=1.." << n << "} P_r(" << k
                    << "_e) = " << rhs;
                result.detail = msg.str();
                return result;
            }
        }
    }
    std::ostringstream msg;
    msg << "sum_{s=1..n+1-k} P_{n+1}(k+s) = sum_{r=1..n} P_r(k_e) holds for n=1.." << N - 1
        << ", k=1..n";
    result.detail = msg.str();
    return result;
}

IdentityResult verify_exact_mass_partial_sum_bounds(std::span<const CountTable> tables) {
    require_contiguous(tables);
    const std::size_t N = tables.size();
    IdentityResult result{"exact_mass_partial_sum_bounds", true, true, ""};
    for (std::size_t k = 1; k <= N + 1; ++k) {
        big_rational running = 0;
        for (std::size_t r = 1; r <= N; ++r) {
            const big_rational term = tables[r - 1].exact_pmf(k);
            running += term; // terms are non-negative, so the sum is non-decreasing
            if (running > 1) {
                result.passed = false;
                std::ostringstream msg;
                msg << "k=" << k << ": sum_{r=1.." << r << "} P_r(k_e) = " << running
                    << " exceeds 1";
                result.detail = msg.str();
                return result;
            }
        }
    }
    std::ostringstream msg;
    msg << "sum_{r=1..N} P_r(k_e) is non-decreasing in N and <= 1 for k=1.." << N + 1;
    result.detail = msg.str();
    return result;
}

IdentityResult observe_full_length_exact_mass(std::span<const CountTable> tables) {
    require_contiguous(tables);
    const std::size_t N = tables.size();
    IdentityResult result{"claim_full_length_exact_mass_vanishes", false, true, ""};
    if (N < 2) {
        result.detail = "vacuous: needs tables for at least two lengths";
        return result;
    }
    for (std::size_t n = 2; n <= N; ++n) {
        big_rational sum = 0;
        for (std::size_t r = 1; r <= n; ++r) sum += tables[r - 1].exact_pmf(n);
        if (sum != 0) {
            result.passed = false;
            std::ostringstream msg;
            msg << "counterexample n=" << n << ": sum_{r=1.." << n << "} P_r(" << n
                << "_e) = " << sum << ", not 0";
            result.detail = msg.str();
            return result;
        }
    }
    std::ostringstream msg;
    msg << "no counterexample for n=2.." << N;
    result.detail = msg.str();
    return result;
}

IdentityResult observe_tail_support(std::span<const CountTable> tables) {
    require_contiguous(tables);
    const std::size_t N = tables.size();
    IdentityResult result{"claim_tail_mass_vanishes", false, true, ""};
    if (N < 3) {
        result.detail = "vacuous: needs tables for at least three lengths";
        return result;
    }
    for (std::size_t n = 2; n + 1 <= N; ++n) {
        for (std::size_t k = 1; k + 1 <= n; ++k) {
            for (std::size_t s = n - k + 1; s <= n + 1 - k; ++s) {
                const big_rational mass = tables[n].pmf(k + s);
                if (mass != 0) {
                    result.passed = false;
                    std::ostringstream msg;
                    msg << "counterexample n=" << n << ", k=" << k << ", s=" << s << ": P_"
                        << n + 1 << "(" << k + s << ") = " << mass
                        << ", not 0 although s > n-k";
                    result.detail = msg.str();
                    return result;
                }
            }
        }
    }
    std::ostringstream msg;
    msg << "no counterexample for n=2.." << N - 1;
    result.detail = msg.str();
    return result;
}

std::vector<IdentityResult> run_identity_checks(std::span<const CountTable> tables) {
    require_contiguous(tables);
    const std::size_t N = tables.size();

    std::vector<IdentityResult> results;

    IdentityResult step{"step_recurrence", true, true,
                        "vacuous: needs tables for at least two lengths"};
    for (std::size_t n = 1; n + 1 <= N; ++n) {
        step = verify_step_recurrence(tables[n - 1], tables[n]);
        if (!step.passed) break;
    }
    if (step.passed && N >= 2) {
        std::ostringstream msg;
        msg << "N_{n+1}(k+1) = alpha*(N_n(k+1) - N_n((k+1)_e) + N_n(k_e)) holds for n=1.."
            << N - 1 << ", every k";
        step.detail = msg.str();
    }
    results.push_back(std::move(step));

    results.push_back(verify_cdf_exact_mass_identity(tables));
    results.push_back(verify_cdf_extension(tables));
    results.push_back(verify_cdf_monotone_in_length(tables));
    results.push_back(verify_tail_mass_telescoping(tables));
    results.push_back(verify_exact_mass_partial_sum_bounds(tables));
    results.push_back(observe_full_length_exact_mass(tables));
    results.push_back(observe_tail_support(tables));
    return results;
}

} // namespace lz76
