#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "csa/rational.hpp"

namespace csa {

/// A place of the base field: the infinite place of Q, a rational prime, or
/// (abstract-base mode only) an opaque label supplied by the user.
class Place {
   public:
    enum class Kind { Finite, Named, Infinite };

    static Place infinite();
    /// Throws NonPrimePlace unless p is prime.
    static Place finite(const Int& p);
    static Place named(std::string label);
    /// "inf" / "infinity" or a decimal prime.
    static Place parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    const Int& prime() const;
    const std::string& label() const noexcept { return label_; }
    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b) noexcept {
        return a.kind_ == b.kind_ && a.prime_ == b.prime_ && a.label_ == b.label_;
    }
    /// Finite places by prime, then labels, then the infinite place.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b) noexcept;

   private:
    Place(Kind kind, Int prime, std::string label) : kind_(kind), prime_(std::move(prime)), label_(std::move(label)) {}
    Kind kind_;
    Int prime_;
    std::string label_;
};

}  // namespace csa
