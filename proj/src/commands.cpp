#include "csa/commands.hpp"

#include <map>

#include "csa/error.hpp"
#include "csa/integer.hpp"
#include "csa/poly_io.hpp"
#include "csa/zpoly.hpp"

namespace csa {

namespace {

[[noreturn]] void missing(const char* what) { throw Error(ErrorKind::InvalidArgument, std::string(what) + " is required"); }

struct PolyArg {
    std::optional<RatPoly> poly;
    std::optional<Factorization> factored;
    RatPoly expanded() const { return poly ? *poly : factored->expand(); }
};

PolyArg poly_arg(const Json& j) {
    if (j.is_object() && j.contains("factors")) return {std::nullopt, factorization_from_json(j)};
    return {poly_from_json(j), std::nullopt};
}

RatPoly single_poly(const CommandInput& in) {
    if (in.polys.size() != 1) throw Error(ErrorKind::InvalidArgument, "expected exactly one polynomial");
    return poly_arg(in.polys[0]).expanded();
}

CsaSpec algebra(const CommandInput& in) {
    if (in.algebra.is_null()) missing("algebra");
    return algebra_from_json(in.algebra);
}

std::optional<SplittingOverride> override_of(const CommandInput& in, const CsaSpec& spec) {
    if (in.override_doc.is_null()) return std::nullopt;
    return override_from_json(in.override_doc, spec.abstract_base);
}

const SplittingOverride* ptr(const std::optional<SplittingOverride>& ov) { return ov ? &*ov : nullptr; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

MatrixDocument single_matrix(const CommandInput& in) {
    if (in.matrices.size() != 1) throw Error(ErrorKind::InvalidArgument, "expected exactly one matrix");
    return matrix_from_json(in.matrices[0]);
}

CommandResult factor(const CommandInput& in) {
    const RatPoly f = single_poly(in);
    if (f.is_zero() || f.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "nothing to factor");
    Json doc = factorization_to_json(factor_over_q(f.monic()));
    doc["leading"] = rat_to_json(f.leading());
    doc["poly"] = poly_to_json(f);
    return {doc};
}

CommandResult splitting(const CommandInput& in) {
    const RatPoly p = single_poly(in);
    if (!p.is_monic()) throw Error(ErrorKind::NonMonic, "splitting needs a monic irreducible polynomial");
    if (!is_irreducible(p)) throw Error(ErrorKind::NotIrreducible, format_poly(p) + " is reducible");
    std::vector<Place> places;
    if (in.places.empty()) {
        // infinity and every prime dividing the discriminant of the integral model
        const Rat disc = discriminant(zpoly::to_rat(zpoly::integral_monic(p).first));
        for (const auto& [q, e] : factor_integer(abs(disc.get_num()))) places.push_back(Place::finite(q));
        places.push_back(Place::infinite());
    } else {
        for (const auto& s : in.places) places.push_back(Place::parse(s));
    }
    Json rows = Json::array();
    for (const auto& v : places) rows.push_back(splitting_to_json(local_splitting(p, v)));
    return {{{"poly", poly_to_json(p)}, {"places", rows}}};
}

CommandResult capacity(const CommandInput& in) {
    const CsaSpec spec = algebra(in);
    const auto ov = override_of(in, spec);
    const RatPoly p = single_poly(in);
    const auto c = capacity_and_division_degree_over(spec, p, ptr(ov));
    Json inv = Json::array();
    for (const auto& t : tensor_invariants(spec, p, ptr(ov)))
        inv.push_back({{"place", t.place.is_infinite() ? "inf" : t.place.to_string()},
                       {"index", t.index},
                       {"local_degree", t.local_degree},
                       {"value", rat_to_json(t.value)}});
    return {{{"poly", poly_to_json(p)}, {"c", c.capacity}, {"d_p", c.division_degree}, {"tensor_invariants", inv}}};
}

CommandResult charpoly_check(const CommandInput& in) {
    const CsaSpec spec = algebra(in);
    const auto ov = override_of(in, spec);
    if (in.polys.size() != 1) throw Error(ErrorKind::InvalidArgument, "expected exactly one polynomial");
    const PolyArg f = poly_arg(in.polys[0]);
    const auto v = f.factored ? is_characteristic_polynomial(spec, *f.factored, ptr(ov))
                              : is_characteristic_polynomial(spec, *f.poly, ptr(ov));
    Json doc = verdict_to_json(v);
    if (in.explain) doc["explanation"] = explain_verdict(v);
    return {doc, !v.answer};
}

CommandResult embed_check(const CommandInput& in) {
    const CsaSpec spec = algebra(in);
    const auto ov = override_of(in, spec);
    const RatPoly p = single_poly(in);
    const bool yes = embeds(p, spec, ptr(ov));
    const auto c = capacity_and_division_degree_over(spec, p, ptr(ov));
    Json doc{{"answer", yes_no(yes)}, {"poly", poly_to_json(p)}, {"deg_p", p.degree()}, {"n", spec.capacity},
             {"c", c.capacity}};
    if (in.explain)
        doc["explanation"] = "deg p = " + std::to_string(p.degree()) + (yes ? " divides " : " does not divide ") +
                             "n * c = " + std::to_string(spec.capacity * c.capacity) + ".";
    return {doc, !yes};
}

CommandResult classes(const CommandInput& in) {
    const CsaSpec spec = algebra(in);
    const auto ov = override_of(in, spec);
    const RatPoly f = single_poly(in);
    Json rows = Json::array();
    for (const auto& lam : classes_with_charpoly(spec, f, ptr(ov))) rows.push_back(class_to_json(lam));
    return {{{"poly", poly_to_json(f)}, {"count", rows.size()}, {"classes", rows}}};
}

CommandResult rcf(const CommandInput& in) {
    const CsaSpec spec = algebra(in);
    const auto ov = override_of(in, spec);
    if (in.class_doc.is_null()) missing("class");
    const ClassInvariant lam = class_from_json(in.class_doc);
    Json doc = rcf_to_json(rcf_structure(spec, lam, ptr(ov)));
    doc["charpoly"] = poly_to_json(char_poly_of_class(spec, lam, ptr(ov)));
    doc["minpoly"] = poly_to_json(min_poly_of_class(lam));
    doc["semisimplification"] = class_to_json(semisimplify_class(lam));
    return {doc};
}

CommandResult realizable(const CommandInput& in) {
    const CsaSpec spec = algebra(in);
    const auto ov = override_of(in, spec);
    if (in.minpoly.is_null()) missing("minpoly");
    const RatPoly f = single_poly(in);
    const RatPoly m = poly_arg(in.minpoly).expanded();
    const bool yes = realizable_pair(spec, f, m, ptr(ov));
    return {{{"answer", yes_no(yes)}, {"charpoly", poly_to_json(f)}, {"minpoly", poly_to_json(m)}}, !yes};
}

CommandResult quat_charpoly(const CommandInput& in) {
    const auto d = single_matrix(in);
    const RatPoly f = charpoly_quat(d.algebra, d.matrix), m = minpoly_quat(d.algebra, d.matrix);
    return {{{"charpoly", poly_to_json(f)},
             {"charpoly_text", format_poly(f)},
             {"minpoly", poly_to_json(m)},
             {"minpoly_text", format_poly(m)}}};
}

CommandResult quat_invariants(const CommandInput& in) {
    const auto d = single_matrix(in);
    return {invariants_to_json(invariants_of_element(d.algebra, d.matrix, in.allow_singular))};
}

CommandResult quat_conjugate(const CommandInput& in) {
    if (in.matrices.size() != 2) throw Error(ErrorKind::InvalidArgument, "expected two matrices");
    const auto d1 = matrix_from_json(in.matrices[0]), d2 = matrix_from_json(in.matrices[1]);
    if (d1.algebra.a() != d2.algebra.a() || d1.algebra.b() != d2.algebra.b())
        throw Error(ErrorKind::InvalidArgument, "the matrices live in different quaternion algebras");
    const bool yes = conjugate_test(d1.algebra, d1.matrix, d2.matrix);
    return {{{"answer", yes_no(yes)},
             {"first", invariants_to_json(invariants_of_element(d1.algebra, d1.matrix))},
             {"second", invariants_to_json(invariants_of_element(d2.algebra, d2.matrix))}},
            !yes};
}

CommandResult quat_search(const CommandInput& in) {
    if (in.algebra.is_null()) missing("algebra");
    const QuatAlgebra alg = quaternion_from_json(in.algebra);
    const RatPoly f = single_poly(in);
    if (f.degree() < 2 || f.degree() % 2 != 0) throw Error(ErrorKind::DegreeMismatch, "target degree must be 2n");
    const auto w = search_realization(alg, f.degree() / 2, f, in.height, in.trials, in.seed);
    Json doc{{"found", w.has_value()}, {"poly", poly_to_json(f)}, {"height", in.height}, {"trials", in.trials},
             {"seed", in.seed}};
    doc["witness"] = w ? matrix_to_json(alg, *w) : Json(nullptr);
    return {doc};
}

CommandResult division_classes(const CommandInput& in) {
    const CsaSpec spec = algebra(in);
    const auto ov = override_of(in, spec);
    std::vector<RatPoly> candidates;
    for (const auto& j : in.polys) candidates.push_back(poly_arg(j).expanded());
    Json rows = Json::array();
    for (const auto& p : enumerate_division_classes(spec, candidates, ptr(ov))) rows.push_back(poly_to_json(p));
    return {{{"classes", rows}}};
}

using Handler = CommandResult (*)(const CommandInput&);

const std::vector<std::pair<std::string, Handler>>& table() {
    static const std::vector<std::pair<std::string, Handler>> t = {
        {"factor", factor},
        {"splitting", splitting},
        {"capacity", capacity},
        {"charpoly-check", charpoly_check},
        {"embed-check", embed_check},
        {"classes", classes},
        {"rcf", rcf},
        {"realizable", realizable},
        {"quat-charpoly", quat_charpoly},
        {"quat-invariants", quat_invariants},
        {"quat-conjugate", quat_conjugate},
        {"quat-search", quat_search},
        {"division-classes", division_classes},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, h] : table()) out.push_back(name);
        return out;
    }();
    return names;
}

CommandResult run_command(const std::string& name, const CommandInput& in) {
    for (const auto& [n, h] : table())
        if (n == name) return h(in);
    throw Error(ErrorKind::InvalidArgument, "unknown command " + name);
}

}  // namespace csa
