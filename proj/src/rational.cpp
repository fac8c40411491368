#include "csa/rational.hpp"

#include <cctype>

#include "csa/error.hpp"

namespace csa {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorKind::NonMonic: return "NonMonic";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::NonPrimePlace: return "NonPrimePlace";
        case ErrorKind::NonIntegralInput: return "NonIntegralInput";
        case ErrorKind::UnsupportedLocalComputation: return "UnsupportedLocalComputation";
        case ErrorKind::MissingOverride: return "MissingOverride";
        case ErrorKind::InvariantSumNonzero: return "InvariantSumNonzero";
        case ErrorKind::BadArchimedeanInvariant: return "BadArchimedeanInvariant";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::ReductionObstructed: return "ReductionObstructed";
        case ErrorKind::SplitAlgebra: return "SplitAlgebra";
        case ErrorKind::NotACharPoly: return "NotACharPoly";
        case ErrorKind::NonIntegral: return "NonIntegral";
        case ErrorKind::KeyIsT: return "KeyIsT";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::InvalidClass: return "InvalidClass";
        case ErrorKind::NotDivisionAlgebra: return "NotDivisionAlgebra";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::InternalNonRational: return "InternalNonRational";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Int parse_int(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::string digits;
    size_t i = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        if (s[0] == '-') digits.push_back('-');
        i = 1;
    }
    if (i == s.size()) throw Error(ErrorKind::ParseError, "expected an integer in '" + std::string(whole) + "'");
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(ErrorKind::ParseError, "bad digit in rational '" + std::string(whole) + "'");
        digits.push_back(s[i]);
    }
    return Int(digits);
}

}  // namespace

Rat parse_rat(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string_view::npos) {
        r = Rat(parse_int(s, text));
    } else {
        Int num = parse_int(s.substr(0, slash), text);
        Int den = parse_int(s.substr(slash + 1), text);
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
        r = Rat(num, den);
        r.canonicalize();
    }
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

Rat mod_one(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Rat out = r - Rat(q);
    out.canonicalize();
    return out;
}

long valuation(const Int& z, const Int& p) {
    if (z == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
    Int w = z;
    long v = 0;
    while (mpz_divisible_p(w.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(w.get_mpz_t(), w.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

bool is_rational_square(const Rat& r, Rat* root) {
    if (r < 0) return false;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return false;
    if (root) {
        Int n, d;
        mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
        *root = Rat(n, d);
        root->canonicalize();
    }
    return true;
}

Int lcm(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Int height(const Rat& r) {
    Int n = abs(r.get_num());
    return n > r.get_den() ? n : Int(r.get_den());
}

}  // namespace csa
