#include "csa/documents.hpp"

#include "csa/error.hpp"
#include "csa/poly_io.hpp"

namespace csa {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) bad(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(where + ": missing \"" + key + "\"");
    return *it;
}

long integer_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where + ": expected an integer");
    return j.get<long>();
}

const Json& array_at(const Json& j, const std::string& where) {
    if (!j.is_array()) bad(where + ": expected an array");
    return j;
}

Place place_from_json(const Json& j, bool abstract_base, const std::string& where) {
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number_integer())
        text = std::to_string(j.get<long>());
    else
        bad(where + ": expected a place");
    if (abstract_base) return Place::named(text);
    return Place::parse(text);
}

Json place_to_json(const Place& v) { return v.is_infinite() ? Json("inf") : Json(v.to_string()); }

Json optional_long(const std::optional<long>& x) { return x ? Json(*x) : Json(nullptr); }

const char* cond_b_name(CondB b) {
    switch (b) {
        case CondB::Pass: return "pass";
        case CondB::Fail: return "fail";
        case CondB::NotEvaluated: return "not-evaluated";
    }
    return "";
}

}  // namespace

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    bad("expected a rational as a string or integer");
}

Json rat_to_json(const Rat& r) { return to_string(r); }

RatPoly poly_from_json(const Json& j) {
    if (j.is_string()) return parse_poly(j.get<std::string>());
    if (!j.is_array()) bad("expected a polynomial as an infix string or a coefficient array");
    std::vector<Rat> c;
    for (const auto& x : j) c.push_back(rat_from_json(x));
    return RatPoly(std::move(c));
}

Json poly_to_json(const RatPoly& p) {
    Json out = Json::array();
    for (const auto& s : to_coeff_strings(p)) out.push_back(s);
    return out;
}

CsaSpec algebra_from_json(const Json& j) {
    if (!j.is_object()) bad("algebra: expected an object");
    CsaSpec spec;
    if (j.contains("capacity")) spec.capacity = integer_from_json(j["capacity"], "algebra.capacity");
    if (j.contains("quaternion")) {
        const auto& q = j["quaternion"];
        const auto base = quaternion_to_csa(rat_from_json(field(q, "a", "algebra.quaternion")),
                                            rat_from_json(field(q, "b", "algebra.quaternion")), spec.capacity);
        return base;
    }
    if (j.contains("base")) {
        const auto& b = j["base"];
        if (b == "abstract")
            spec.abstract_base = true;
        else if (b != "Q")
            bad("algebra.base: expected \"Q\" or \"abstract\"");
    }
    if (j.contains("invariants")) {
        const auto& inv = array_at(j["invariants"], "algebra.invariants");
        for (size_t i = 0; i < inv.size(); ++i) {
            const std::string where = "algebra.invariants[" + std::to_string(i) + "]";
            const Place v = place_from_json(field(inv[i], "place", where), spec.abstract_base, where);
            const Rat value = rat_from_json(field(inv[i], "value", where));
            if (spec.invariants.count(v)) bad(where + ": duplicate place " + v.to_string());
            spec.invariants.emplace(v, value);
        }
    }
    return validate_csa(spec);
}

Json algebra_to_json(const CsaSpec& spec) {
    Json out;
    out["capacity"] = spec.capacity;
    if (spec.abstract_base) out["base"] = "abstract";
    Json inv = Json::array();
    for (const auto& [v, x] : spec.invariants) inv.push_back({{"place", place_to_json(v)}, {"value", rat_to_json(x)}});
    out["invariants"] = inv;
    out["index"] = spec.index();
    out["degree"] = spec.degree();
    return out;
}

QuatAlgebra quaternion_from_json(const Json& j) {
    const Json& q = j.is_object() && j.contains("quaternion") ? j["quaternion"] : j;
    return QuatAlgebra(rat_from_json(field(q, "a", "quaternion")), rat_from_json(field(q, "b", "quaternion")));
}

SplittingOverride override_from_json(const Json& j, bool abstract_base) {
    SplittingOverride ov;
    const auto& rows = array_at(j, "override");
    for (size_t i = 0; i < rows.size(); ++i) {
        const std::string where = "override[" + std::to_string(i) + "]";
        const RatPoly p = poly_from_json(field(rows[i], "poly", where));
        const Place v = place_from_json(field(rows[i], "place", where), abstract_base, where);
        std::vector<int> degrees;
        for (const auto& d : array_at(field(rows[i], "local_degrees", where), where + ".local_degrees"))
            degrees.push_back(static_cast<int>(integer_from_json(d, where + ".local_degrees")));
        ov.add(p, v, std::move(degrees));
    }
    return ov;
}

Json override_to_json(const SplittingOverride& ov) {
    Json out = Json::array();
    for (const auto& [key, degrees] : ov.entries())
        out.push_back({{"poly", poly_to_json(key.first)}, {"place", place_to_json(key.second)}, {"local_degrees", degrees}});
    return out;
}

ClassInvariant class_from_json(const Json& j) {
    ClassInvariant lam;
    const auto& rows = array_at(field(j, "assignments", "class"), "class.assignments");
    for (size_t i = 0; i < rows.size(); ++i) {
        const std::string where = "class.assignments[" + std::to_string(i) + "]";
        const RatPoly p = poly_from_json(field(rows[i], "poly", where));
        Partition part;
        for (const auto& x : array_at(field(rows[i], "partition", where), where + ".partition"))
            part.push_back(integer_from_json(x, where + ".partition"));
        if (lam.count(p)) bad(where + ": duplicate polynomial " + format_poly(p));
        lam.emplace(p, std::move(part));
    }
    return lam;
}

Json class_to_json(const ClassInvariant& lam) {
    Json rows = Json::array();
    for (const auto& [p, part] : lam) rows.push_back({{"poly", poly_to_json(p)}, {"partition", part}});
    return {{"assignments", rows}};
}

Factorization factorization_from_json(const Json& j) {
    Factorization f;
    const auto& rows = array_at(field(j, "factors", "factorization"), "factorization.factors");
    for (size_t i = 0; i < rows.size(); ++i) {
        const std::string where = "factorization.factors[" + std::to_string(i) + "]";
        const RatPoly p = poly_from_json(field(rows[i], "poly", where));
        const long m = rows[i].contains("multiplicity") ? integer_from_json(rows[i]["multiplicity"], where) : 1;
        if (m < 1) bad(where + ": multiplicity must be positive");
        f.factors.push_back({p, static_cast<unsigned>(m)});
    }
    return f;
}

Json factorization_to_json(const Factorization& f) {
    Json rows = Json::array();
    for (const auto& fp : f.factors)
        rows.push_back({{"poly", poly_to_json(fp.poly)}, {"text", format_poly(fp.poly)}, {"multiplicity", fp.multiplicity}});
    return {{"factors", rows}};
}

MatrixDocument matrix_from_json(const Json& j) {
    QuatAlgebra alg = quaternion_from_json(field(j, "algebra", "matrix"));
    const long n = integer_from_json(field(j, "n", "matrix"), "matrix.n");
    if (n < 1) bad("matrix.n: must be positive");
    const auto& rows = array_at(field(j, "entries", "matrix"), "matrix.entries");
    if (static_cast<long>(rows.size()) != n) bad("matrix.entries: expected " + std::to_string(n) + " rows");
    QuatMat m(n);
    for (long r = 0; r < n; ++r) {
        const std::string where = "matrix.entries[" + std::to_string(r) + "]";
        const auto& row = array_at(rows[static_cast<size_t>(r)], where);
        if (static_cast<long>(row.size()) != n) bad(where + ": expected " + std::to_string(n) + " entries");
        for (long c = 0; c < n; ++c) {
            const auto& e = array_at(row[static_cast<size_t>(c)], where);
            if (e.size() != 4) bad(where + "[" + std::to_string(c) + "]: expected [w, x, y, z]");
            m.at(r, c) = {rat_from_json(e[0]), rat_from_json(e[1]), rat_from_json(e[2]), rat_from_json(e[3])};
        }
    }
    return {std::move(alg), std::move(m)};
}

Json matrix_to_json(const QuatAlgebra& alg, const QuatMat& m) {
    Json rows = Json::array();
    for (long r = 0; r < m.n; ++r) {
        Json row = Json::array();
        for (long c = 0; c < m.n; ++c) {
            const auto& e = m.at(r, c);
            row.push_back({rat_to_json(e.w), rat_to_json(e.x), rat_to_json(e.y), rat_to_json(e.z)});
        }
        rows.push_back(row);
    }
    return {{"algebra", {{"a", rat_to_json(alg.a())}, {"b", rat_to_json(alg.b())}}}, {"n", m.n}, {"entries", rows}};
}

Json splitting_to_json(const SplittingType& s) {
    Json out;
    out["place"] = place_to_json(s.place);
    if (s.place.is_infinite()) {
        out["real"] = s.real;
        out["complex"] = s.complex;
    } else {
        Json f = Json::array();
        for (const auto& lf : s.factors) f.push_back({{"e", lf.e}, {"f", lf.f}});
        out["factors"] = f;
    }
    out["local_degrees"] = s.local_degrees();
    return out;
}

Json verdict_to_json(const CharPolyVerdict& v) {
    Json factors = Json::array();
    for (const auto& c : v.factors)
        factors.push_back({{"p", poly_to_json(c.p)},
                           {"text", format_poly(c.p)},
                           {"a", c.a},
                           {"deg_p", c.deg_p},
                           {"n", optional_long(c.n)},
                           {"c", optional_long(c.c)},
                           {"d_p", optional_long(c.d_p)},
                           {"cond_a", c.cond_a ? "pass" : "fail"},
                           {"cond_b", cond_b_name(c.cond_b)}});
    return {{"answer", v.answer ? "yes" : "no"}, {"factors", factors}, {"algebra", algebra_to_json(v.algebra)}};
}

std::vector<std::string> explain_verdict(const CharPolyVerdict& v) {
    std::vector<std::string> out;
    const long d = v.algebra.index();
    for (const auto& c : v.factors) {
        const std::string p = "(" + format_poly(c.p) + ")^" + std::to_string(c.a);
        std::string line;
        if (!c.cond_a) {
            line = p + ": condition (a) fails, a * deg p = " + std::to_string(c.a * c.deg_p) +
                   " is not a multiple of deg D = " + std::to_string(d) + "; condition (b) not evaluated.";
        } else {
            line = p + ": condition (a) holds with n_p = " + std::to_string(*c.n) + " (" + std::to_string(c.a) +
                   " * " + std::to_string(c.deg_p) + " = " + std::to_string(*c.n) + " * " + std::to_string(d) +
                   "); D tensor Q[t]/(p) has capacity c = " + std::to_string(*c.c) + ", so condition (b) " +
                   (c.cond_b == CondB::Pass ? "holds: " : "fails: ") + std::to_string(c.deg_p) +
                   (c.cond_b == CondB::Pass ? " divides " : " does not divide ") + "n_p * c = " +
                   std::to_string(*c.n * *c.c) + ".";
        }
        out.push_back(std::move(line));
    }
    out.push_back(v.answer ? "Every factor passes, so f is a characteristic polynomial of A."
                           : "Some factor fails, so f is not a characteristic polynomial of A.");
    return out;
}

Json rcf_to_json(const std::vector<RcfBlock>& blocks) {
    Json out = Json::array();
    for (const auto& b : blocks)
        out.push_back({{"p", poly_to_json(b.p)},
                       {"text", format_poly(b.p)},
                       {"n", b.n},
                       {"c", b.c},
                       {"d_p", b.d_p},
                       {"dim_w", b.dim_w},
                       {"top_exponent", b.top},
                       {"exponents", b.exponents},
                       {"morita", "V_p = W_p^" + std::to_string(b.c)}});
    return {{"components", out}};
}

Json invariants_to_json(const ElementInvariants& inv) {
    Json kernels = Json::array();
    for (const auto& [p, ks] : inv.kernels) kernels.push_back({{"poly", poly_to_json(p)}, {"dims", ks}});
    Json out{{"charpoly", poly_to_json(inv.charpoly)},
             {"charpoly_text", format_poly(inv.charpoly)},
             {"minpoly", poly_to_json(inv.minpoly)},
             {"minpoly_text", format_poly(inv.minpoly)},
             {"class", class_to_json(inv.classes)},
             {"kernels", kernels}};
    out["t_part"] = inv.t_part ? Json(*inv.t_part) : Json(nullptr);
    return out;
}

}  // namespace csa
