#include "csa/charpoly.hpp"

#include "csa/error.hpp"
#include "csa/local_split.hpp"
#include "csa/poly_io.hpp"

namespace csa {

namespace {

void require_monic(const RatPoly& f, const char* what) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, std::string(what) + " is zero");
    if (!f.is_monic()) throw Error(ErrorKind::NonMonic, std::string(what) + " must be monic");
}

void require_degree(const CsaSpec& spec, long deg_f) {
    if (deg_f != spec.degree())
        throw Error(ErrorKind::DegreeMismatch, "polynomial has degree " + std::to_string(deg_f) +
                                                   " but the algebra has degree " + std::to_string(spec.degree()));
}

}  // namespace

CharPolyVerdict is_characteristic_polynomial(const CsaSpec& spec, const RatPoly& f, const SplittingOverride* override) {
    CsaSpec s = validate_csa(spec);
    require_monic(f, "characteristic polynomial");
    require_degree(s, f.degree());
    if (s.abstract_base)
        throw Error(ErrorKind::InvalidArgument, "abstract base: supply the factorization of f over the base field");
    return is_characteristic_polynomial(s, factor_over_q(f), override);
}

CharPolyVerdict is_characteristic_polynomial(const CsaSpec& spec, const Factorization& f,
                                             const SplittingOverride* override) {
    CsaSpec s = validate_csa(spec);
    long total = 0;
    for (const auto& fp : f.factors) {
        require_monic(fp.poly, "factor");
        if (fp.poly.degree() < 1 || fp.multiplicity < 1)
            throw Error(ErrorKind::InvalidArgument, "factors must be nonconstant with positive multiplicity");
        total += fp.poly.degree() * static_cast<long>(fp.multiplicity);
    }
    require_degree(s, total);

    const long d = s.index();
    CharPolyVerdict out;
    out.algebra = s;
    out.answer = true;
    for (const auto& fp : f.factors) {
        FactorCertificate cert;
        cert.p = fp.poly;
        cert.a = fp.multiplicity;
        cert.deg_p = fp.poly.degree();
        const long weight = cert.a * cert.deg_p;
        cert.cond_a = weight % d == 0;
        if (cert.cond_a) {
            cert.n = weight / d;
            auto cap = capacity_and_division_degree_over(s, fp.poly, override);
            cert.c = cap.capacity;
            cert.d_p = cap.division_degree;
            cert.cond_b = (*cert.n * *cert.c) % cert.deg_p == 0 ? CondB::Pass : CondB::Fail;
        }
        out.answer = out.answer && cert.passes();
        out.factors.push_back(std::move(cert));
    }
    return out;
}

std::vector<PrimaryComponent> reduce_to_primary(const CsaSpec& spec, const RatPoly& f) {
    CsaSpec s = validate_csa(spec);
    require_monic(f, "characteristic polynomial");
    require_degree(s, f.degree());
    const long d = s.index();
    std::vector<PrimaryComponent> out;
    for (const auto& fp : factor_over_q(f).factors) {
        const long weight = fp.poly.degree() * static_cast<long>(fp.multiplicity);
        if (weight % d != 0)
            throw Error(ErrorKind::ReductionObstructed,
                        "factor " + format_poly(fp.poly) + " has a * deg p = " + std::to_string(weight) +
                            ", not a multiple of deg D = " + std::to_string(d));
        CsaSpec sub = s;
        sub.capacity = weight / d;
        out.push_back({fp.poly, static_cast<long>(fp.multiplicity), weight / d, std::move(sub)});
    }
    return out;
}

bool embeds(const RatPoly& p, const CsaSpec& spec, const SplittingOverride* override) {
    CsaSpec s = validate_csa(spec);
    require_monic(p, "p");
    if (p.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "p must be nonconstant");
    if (!s.abstract_base && !is_irreducible(p)) throw Error(ErrorKind::NotIrreducible, format_poly(p) + " is reducible");
    const long c = capacity_and_division_degree_over(s, p, override).capacity;
    return (s.capacity * c) % p.degree() == 0;
}

bool quaternion_local_global_embed(const Rat& a, const Rat& b, const RatPoly& p) {
    CsaSpec s = quaternion_to_csa(a, b, 1);
    if (s.invariants.empty())
        throw Error(ErrorKind::SplitAlgebra, "(" + to_string(a) + ", " + to_string(b) + ") is split");
    require_monic(p, "p");
    if (p.degree() != 2) throw Error(ErrorKind::InvalidArgument, "p must be quadratic");
    if (!is_irreducible(p)) throw Error(ErrorKind::NotIrreducible, format_poly(p) + " is reducible");
    for (const auto& [v, inv] : s.invariants) {
        auto st = local_splitting(p, v);
        const bool field = v.is_infinite() ? st.complex == 1 : st.factors.size() == 1;
        if (!field) return false;
    }
    return true;
}

bool minpoly_charpoly_compatible(const RatPoly& m, const RatPoly& f, long deg_a) {
    require_monic(m, "minimal polynomial");
    require_monic(f, "characteristic polynomial");
    if (f.degree() != deg_a)
        throw Error(ErrorKind::DegreeMismatch, "characteristic polynomial has degree " + std::to_string(f.degree()) +
                                                   ", expected " + std::to_string(deg_a));
    if (m.degree() < 1 || !divides(m, f)) return false;
    auto fm = factor_over_q(m), ff = factor_over_q(f);
    if (fm.factors.size() != ff.factors.size()) return false;
    for (size_t i = 0; i < fm.factors.size(); ++i)
        if (fm.factors[i].poly != ff.factors[i].poly) return false;
    if (fm.factors.size() == 1 && fm.factors[0].multiplicity == 1) {
        if (deg_a % m.degree() != 0) return false;
        return f == m.pow(static_cast<unsigned>(deg_a / m.degree()));
    }
    return true;
}

}  // namespace csa
