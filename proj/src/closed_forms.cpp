#include "mcg/closed_forms.hpp"

#include <sstream>

namespace mcg {

namespace {

BigInt big_pow(int64_t base, int32_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

int sign_pow(int32_t h) { return h % 2 == 0 ? 1 : -1; }

void check_mc_base(int64_t m, int32_t h) {
    if (m != 2 && m != 3) throw domain_error("closed forms cover bases 2 and 3 only");
    if (h < 1) throw domain_error("exponent h must be >= 1");
}

// max[L u M] of the base-2 BFS tree, big-integer version.
BigInt max_lm_big(int32_t h) {
    return (big_pow(2, h + 1) - (h % 2 == 0 ? 2 : 1)) / 3;
}

std::string rat_str(const BigRat& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

} // namespace

int32_t regularity_closed(int64_t m, int32_t h) {
    check_mc_base(m, h);
    return m == 2 ? 2 * h - 1 : 2 * h;
}

int64_t diam_closed(int64_t m, int32_t h) {
    if (m != 2 && m != 3)
        throw domain_error("diam_closed covers bases 2 and 3; use diam_grc for other bases");
    if (h < 1) throw domain_error("exponent h must be >= 1");
    if (m == 2) return h - h / 2; // n for h=2n, n+1 for h=2n+1
    return h;
}

int64_t diam_grc(const std::vector<int64_t>& bases) {
    if (bases.empty()) throw domain_error("diam_grc requires a non-empty base list");
    int64_t sum = 0, lambda = 0;
    for (int64_t b : bases) {
        if (b < 2) throw domain_error("GRC bases must be >= 2");
        sum += b / 2;
        if (b % 2 == 0) ++lambda;
    }
    return sum - lambda / 2;
}

BigInt rho_closed(int64_t m, int32_t h) {
    check_mc_base(m, h);
    if (m == 2) {
        BigInt num = big_pow(2, h) * (3 * h + 1) - sign_pow(h);
        if (num % 9 != 0)
            throw std::logic_error("rho_closed: base-2 numerator not divisible by 9");
        return num / 9;
    }
    return BigInt(2 * h) * big_pow(3, h - 1);
}

BigInt rho_recursion_step(int64_t m, int32_t h, const BigInt& prev_rho) {
    check_mc_base(m, h);
    if (h < 2) throw domain_error("recursion step requires h >= 2");
    if (m == 2)
        return 2 * (prev_rho + (big_pow(2, h - 1) - max_lm_big(h - 1))) - 1;
    return 3 * prev_rho + 2 * big_pow(3, h - 1);
}

BigRat mu_closed(int64_t m, int32_t h) {
    check_mc_base(m, h);
    return BigRat(rho_closed(m, h), big_pow(m, h) - 1);
}

BigRat mu_old_definition(int64_t m, int32_t h) {
    check_mc_base(m, h);
    return BigRat(rho_closed(m, h), big_pow(m, h));
}

BigInt xi_closed(int64_t m, int32_t h) {
    check_mc_base(m, h);
    return rho_closed(m, h) - (big_pow(m, h) - 1);
}

PiBounds pi_bounds(int64_t m, int32_t h) {
    check_mc_base(m, h);
    const BigInt rho = rho_closed(m, h);
    const int32_t r = regularity_closed(m, h);
    PiBounds b;
    b.lower = BigRat(2 * rho, r);
    b.upper = big_pow(m, h) + rho - (2 * r - 1);
    return b;
}

BigInt xi_printed_base3(int32_t h) {
    if (h < 1) throw domain_error("exponent h must be >= 1");
    return big_pow(3, h - 1) * (big_pow(2, h) - 3) + 1;
}

BigRat pi_upper_printed_base2(int32_t h) {
    if (h < 1) throw domain_error("exponent h must be >= 1");
    BigInt num = big_pow(2, h) + big_pow(2, h) * (3 * h + 1) - sign_pow(h) - 36 * h + 27;
    return BigRat(num, 9);
}

std::vector<ErrataEntry> errata_report(int32_t h_max) {
    std::vector<ErrataEntry> out;
    for (int32_t h = 1; h <= h_max; ++h) {
        const BigInt xi_lemma = xi_closed(3, h);
        const BigInt xi_print = xi_printed_base3(h);
        out.push_back({"xi", 3, h, xi_lemma.str(), xi_print.str(), xi_lemma != xi_print});

        const BigInt up_lemma = pi_bounds(2, h).upper;
        const BigRat up_print = pi_upper_printed_base2(h);
        out.push_back({"pi_upper", 2, h, up_lemma.str(), rat_str(up_print),
                       BigRat(up_lemma) != up_print});
    }
    return out;
}

std::vector<BigInt> oeis_a045883(int32_t count) {
    if (count < 1) throw domain_error("count must be >= 1");
    std::vector<BigInt> terms;
    terms.reserve(count);
    for (int32_t k = 0; k < count; ++k) {
        BigInt num = big_pow(2, k) * (3 * k + 1) - sign_pow(k);
        terms.push_back(num / 9);
    }
    return terms;
}

std::vector<BigInt> oeis_a212697(int32_t count) {
    if (count < 1) throw domain_error("count must be >= 1");
    std::vector<BigInt> terms;
    terms.reserve(count);
    for (int32_t k = 1; k <= count; ++k)
        terms.push_back(BigInt(2 * k) * big_pow(3, k - 1));
    return terms;
}

ClosedFormReport closed_form_report(int64_t m, int32_t h) {
    check_mc_base(m, h);
    ClosedFormReport r;
    r.m = m;
    r.h = h;
    r.n = big_pow(m, h);
    r.regularity = regularity_closed(m, h);
    r.diameter = diam_closed(m, h);
    r.rho = rho_closed(m, h);
    r.mu = mu_closed(m, h);
    r.xi = xi_closed(m, h);
    const PiBounds pb = pi_bounds(m, h);
    r.pi_lower = pb.lower;
    r.pi_upper = pb.upper;
    r.lambda_even_dims = m % 2 == 0 ? h : 0;
    return r;
}

} // namespace mcg
