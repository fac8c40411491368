#include "csa/classes.hpp"

#include <algorithm>

#include "csa/error.hpp"
#include "csa/poly_io.hpp"

namespace csa {

long partition_size(const Partition& lam) {
    long s = 0;
    for (long part : lam) s += part;
    return s;
}

bool is_partition(const Partition& lam) {
    for (size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < 1) return false;
        if (i > 0 && lam[i] > lam[i - 1]) return false;
    }
    return true;
}

namespace {

void partitions_into(long rest, long cap, Partition& cur, std::vector<Partition>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (long part = std::min(rest, cap); part >= 1; --part) {
        cur.push_back(part);
        partitions_into(rest - part, part, cur, out);
        cur.pop_back();
    }
}

bool is_t(const RatPoly& p) { return p == RatPoly::t(); }

void check_key(const RatPoly& p, bool abstract_base) {
    if (is_t(p)) throw Error(ErrorKind::KeyIsT, "class invariants exclude the polynomial t");
    if (p.degree() < 1 || !p.is_monic())
        throw Error(ErrorKind::InvalidClass, "class key " + format_poly(p) + " must be monic and nonconstant");
    if (!abstract_base && !is_irreducible(p)) throw Error(ErrorKind::InvalidClass, "class key " + format_poly(p) + " is reducible");
}

}  // namespace

std::vector<Partition> partitions_of(long k) {
    std::vector<Partition> out;
    if (k < 0) return out;
    Partition cur;
    partitions_into(k, k, cur, out);
    return out;
}

long partition_count(long k) {
    if (k < 0) return 0;
    std::vector<long> ways(static_cast<size_t>(k) + 1, 0);
    ways[0] = 1;
    for (long part = 1; part <= k; ++part)
        for (long s = part; s <= k; ++s) ways[s] += ways[s - part];
    return ways[k];
}

long dim_w(const CsaSpec& spec, const RatPoly& p, long a, const SplittingOverride* override) {
    CsaSpec s = validate_csa(spec);
    if (a < 1) throw Error(ErrorKind::InvalidArgument, "multiplicity must be positive");
    if (p.degree() < 1 || !p.is_monic()) throw Error(ErrorKind::NonMonic, "p must be monic and nonconstant");
    if (!s.abstract_base && !is_irreducible(p)) throw Error(ErrorKind::NotIrreducible, format_poly(p) + " is reducible");
    const long d = s.index();
    const long weight = a * p.degree();
    if (weight % d != 0)
        throw Error(ErrorKind::NotACharPoly, "(" + format_poly(p) + ")^" + std::to_string(a) +
                                                 " fails a * deg p = n * deg D");
    const long n = weight / d;
    auto cap = capacity_and_division_degree_over(s, p, override);
    if ((n * cap.capacity) % p.degree() != 0)
        throw Error(ErrorKind::NotACharPoly, "(" + format_poly(p) + ")^" + std::to_string(a) +
                                                 " fails deg p | n * c");
    if (a % cap.division_degree != 0)
        throw Error(ErrorKind::NonIntegral, "a / d_p is not an integer for " + format_poly(p));
    const long by_index = a / cap.division_degree;
    const long by_capacity = n * cap.capacity / p.degree();
    if (by_index != by_capacity)
        throw Error(ErrorKind::Internal, "a / d_p = " + std::to_string(by_index) + " but n c / deg p = " +
                                             std::to_string(by_capacity));
    return by_index;
}

ClassCheck validate_class(const CsaSpec& spec, const ClassInvariant& lam, const SplittingOverride* override) {
    CsaSpec s = validate_csa(spec);
    ClassCheck out;
    out.target = s.degree();
    for (const auto& [p, part] : lam) {
        check_key(p, s.abstract_base);
        if (part.empty() || !is_partition(part))
            throw Error(ErrorKind::InvalidClass, "entry for " + format_poly(p) + " is not a non-increasing positive partition");
        ClassTerm term{p, p.degree(), partition_size(part),
                       capacity_and_division_degree_over(s, p, override).division_degree};
        out.total += term.product();
        out.terms.push_back(std::move(term));
    }
    out.valid = !lam.empty() && out.total == out.target;
    return out;
}

std::vector<ClassInvariant> classes_with_charpoly(const CsaSpec& spec, const RatPoly& f,
                                                  const SplittingOverride* override) {
    CsaSpec s = validate_csa(spec);
    if (f.is_zero() || !f.is_monic()) throw Error(ErrorKind::NonMonic, "characteristic polynomial must be monic");
    if (f.degree() != s.degree())
        throw Error(ErrorKind::DegreeMismatch, "polynomial has degree " + std::to_string(f.degree()) +
                                                   " but the algebra has degree " + std::to_string(s.degree()));
    if (f.coeff(0) == 0) throw Error(ErrorKind::NotInvertible, "t divides f: classes of A^x need f(0) != 0");
    auto verdict = is_characteristic_polynomial(s, f, override);
    if (!verdict.answer) return {};

    std::vector<std::pair<RatPoly, std::vector<Partition>>> choices;
    for (const auto& cert : verdict.factors)
        choices.emplace_back(cert.p, partitions_of(dim_w(s, cert.p, cert.a, override)));

    std::vector<ClassInvariant> out;
    std::vector<size_t> idx(choices.size(), 0);
    while (true) {
        ClassInvariant lam;
        for (size_t i = 0; i < choices.size(); ++i) lam.emplace(choices[i].first, choices[i].second[idx[i]]);
        out.push_back(std::move(lam));
        // odometer, last factor fastest
        size_t i = choices.size();
        while (i > 0) {
            --i;
            if (++idx[i] < choices[i].second.size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
    }
}

RatPoly min_poly_of_class(const ClassInvariant& lam) {
    RatPoly out = RatPoly::constant(1);
    for (const auto& [p, part] : lam) {
        if (part.empty() || !is_partition(part))
            throw Error(ErrorKind::InvalidClass, "entry for " + format_poly(p) + " is not a nonempty partition");
        out *= p.pow(static_cast<unsigned>(part.front()));
    }
    return out;
}

RatPoly char_poly_of_class(const CsaSpec& spec, const ClassInvariant& lam, const SplittingOverride* override) {
    auto check = validate_class(spec, lam, override);
    if (!check.valid)
        throw Error(ErrorKind::InvalidClass, "class has total degree " + std::to_string(check.total) + ", algebra has " +
                                                 std::to_string(check.target));
    RatPoly out = RatPoly::constant(1);
    for (const auto& term : check.terms) out *= term.p.pow(static_cast<unsigned>(term.size * term.d_p));
    return out;
}

std::vector<RcfBlock> rcf_structure(const CsaSpec& spec, const ClassInvariant& lam, const SplittingOverride* override) {
    CsaSpec s = validate_csa(spec);
    auto check = validate_class(s, lam, override);
    if (!check.valid)
        throw Error(ErrorKind::InvalidClass, "class has total degree " + std::to_string(check.total) + ", algebra has " +
                                                 std::to_string(check.target));
    const long d = s.index();
    std::vector<RcfBlock> out;
    long n_total = 0;
    for (const auto& [p, part] : lam) {
        auto cap = capacity_and_division_degree_over(s, p, override);
        RcfBlock blk;
        blk.p = p;
        blk.c = cap.capacity;
        blk.d_p = cap.division_degree;
        blk.dim_w = partition_size(part);
        const long a = blk.dim_w * blk.d_p;
        blk.n = a * p.degree() / d;
        blk.top = part.front();
        blk.exponents.assign(part.rbegin(), part.rend());
        if (blk.n * blk.c != blk.dim_w * p.degree())
            throw Error(ErrorKind::Internal, "module dimensions disagree for " + format_poly(p));
        n_total += blk.n;
        out.push_back(std::move(blk));
    }
    if (n_total != s.capacity) throw Error(ErrorKind::Internal, "primary components do not fill the capacity");
    return out;
}

ClassInvariant semisimplify_class(const ClassInvariant& lam) {
    ClassInvariant out;
    for (const auto& [p, part] : lam) out.emplace(p, Partition(static_cast<size_t>(partition_size(part)), 1));
    return out;
}

bool realizable_pair(const CsaSpec& spec, const RatPoly& f, const RatPoly& m, const SplittingOverride* override) {
    CsaSpec s = validate_csa(spec);
    if (!minpoly_charpoly_compatible(m, f, s.degree())) return false;
    auto verdict = is_characteristic_polynomial(s, f, override);
    if (!verdict.answer) return false;
    auto fm = factor_over_q(m);
    for (const auto& cert : verdict.factors) {
        long e = 0;
        for (const auto& fp : fm.factors)
            if (fp.poly == cert.p) e = fp.multiplicity;
        if (e > cert.a / *cert.d_p) return false;
    }
    return true;
}

std::vector<RatPoly> enumerate_division_classes(const CsaSpec& spec, const std::vector<RatPoly>& candidates,
                                                const SplittingOverride* override) {
    CsaSpec s = validate_csa(spec);
    if (s.capacity != 1)
        throw Error(ErrorKind::NotDivisionAlgebra, "capacity " + std::to_string(s.capacity) + " > 1");
    std::vector<RatPoly> out;
    for (const auto& p : candidates) {
        check_key(p, s.abstract_base);
        if (p.degree() * capacity_and_division_degree_over(s, p, override).division_degree == s.index())
            out.push_back(p);
    }
    return out;
}

}  // namespace csa
