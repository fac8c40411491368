#include "csa/poly.hpp"

#include <algorithm>

#include "csa/error.hpp"

namespace csa {

namespace {
const Rat kZero{0};
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t k) {
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::t() { return monomial(1, 1); }

RatPoly RatPoly::linear(const Rat& root) { return RatPoly(std::vector<Rat>{-root, Rat(1)}); }

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& RatPoly::coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const Rat& RatPoly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot normalize the zero polynomial");
    RatPoly out = *this;
    Rat inv = 1 / coeffs_.back();
    for (auto& c : out.coeffs_) c *= inv;
    return out;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return RatPoly(std::move(d));
}

Rat RatPoly::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::pow(unsigned k) const {
    RatPoly result = constant(1), base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rat& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

RatPoly RatPoly::operator-() const {
    RatPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::strong_ordering operator<=>(const RatPoly& a, const RatPoly& b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        int s = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rat> quot(a.degree() - b.degree() + 1);
    const int db = b.degree();
    const Rat inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i] == 0) continue;
        Rat q = rem[i] * inv;
        quot[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    rem.resize(db);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::Internal, "inexact polynomial division");
    return q;
}

bool divides(const RatPoly& b, const RatPoly& a) { return divrem(a, b).second.is_zero(); }

RatPoly gcd_monic(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "gcd of two zero polynomials");
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = divrem(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? r : r.monic();
    }
    return x.monic();
}

std::vector<SquarefreePart> squarefree_decomposition(const RatPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
    if (!f.is_monic()) throw Error(ErrorKind::NonMonic, "squarefree decomposition expects a monic polynomial");
    std::vector<SquarefreePart> out;
    if (f.degree() == 0) return out;
    RatPoly fp = f.derivative();
    RatPoly a = gcd_monic(f, fp);
    RatPoly b = exact_div(f, a);
    RatPoly c = exact_div(fp, a);
    RatPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        RatPoly g = gcd_monic(b, d);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        if (g.degree() > 0) out.push_back({g, i});
        ++i;
    }
    return out;
}

namespace {

int sign_at_infinity(const RatPoly& p, bool positive) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    return s;
}

int variations(const std::vector<RatPoly>& chain, bool positive) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_at_infinity(p, positive);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

int sturm_real_roots(const RatPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm chain of the zero polynomial");
    if (f.degree() == 0) return 0;
    // Each member is scaled by |leading coefficient|, which keeps signs intact.
    auto normalize = [](RatPoly p) { return p * (1 / abs(p.leading())); };
    std::vector<RatPoly> chain{normalize(f), normalize(f.derivative())};
    while (true) {
        RatPoly r = divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(normalize(-r));
    }
    return variations(chain, false) - variations(chain, true);
}

Rat resultant(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant with the zero polynomial");
    RatPoly x = a, y = b;
    Rat out = 1;
    while (y.degree() > 0) {
        const int m = x.degree(), n = y.degree();
        RatPoly r = divrem(x, y).second;
        if (r.is_zero()) return 0;
        if ((m % 2 == 1) && (n % 2 == 1)) out = -out;
        Rat lc = y.leading(), scale = 1;
        for (int i = 0; i < m - r.degree(); ++i) scale *= lc;
        out *= scale;
        x = std::move(y);
        y = std::move(r);
    }
    Rat scale = 1;
    for (int i = 0; i < x.degree(); ++i) scale *= y.leading();
    return out * scale;
}

Rat discriminant(const RatPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "discriminant of a constant");
    const long n = f.degree();
    Rat d = resultant(f, f.derivative()) / f.leading();
    return (n * (n - 1) / 2) % 2 == 0 ? d : Rat(-d);
}

}  // namespace csa
