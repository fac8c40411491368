#include "csa/place.hpp"

#include <cctype>

#include "csa/error.hpp"
#include "csa/integer.hpp"

namespace csa {

Place Place::infinite() { return Place(Kind::Infinite, Int(0), ""); }

Place Place::finite(const Int& p) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimePlace, "place " + p.get_str() + " is not a prime");
    return Place(Kind::Finite, p, "");
}

Place Place::named(std::string label) {
    if (label.empty()) throw Error(ErrorKind::InvalidArgument, "empty place label");
    return Place(Kind::Named, Int(0), std::move(label));
}

Place Place::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "oo") return infinite();
    if (text.empty()) throw Error(ErrorKind::ParseError, "empty place");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::ParseError, "place must be 'inf' or a prime, got '" + std::string(text) + "'");
    return finite(Int(std::string(text)));
}

const Int& Place::prime() const {
    if (kind_ != Kind::Finite) throw Error(ErrorKind::InvalidArgument, "place " + to_string() + " has no prime");
    return prime_;
}

std::string Place::to_string() const {
    switch (kind_) {
        case Kind::Infinite: return "inf";
        case Kind::Named: return label_;
        case Kind::Finite: break;
    }
    return prime_.get_str();
}

std::strong_ordering operator<=>(const Place& a, const Place& b) noexcept {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    int s = cmp(a.prime_, b.prime_);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.label_ <=> b.label_;
}

}  // namespace csa
