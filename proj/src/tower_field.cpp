#include "csa/tower_field.hpp"

namespace csa::ff {

std::shared_ptr<const TowerField> TowerField::prime(const Int& p) {
    auto t = std::shared_ptr<TowerField>(new TowerField(PrimeField(p)));
    t->degree_ = {1};
    t->order_ = {p};
    t->modulus_ = {Poly{}};
    return t;
}

std::shared_ptr<const TowerField> TowerField::extend(Poly modulus) const {
    PolyRing<TowerLevel> ring(field(top()));
    ring.trim(modulus);
    if (modulus.size() < 2) throw Error(ErrorKind::InvalidArgument, "tower modulus must have positive degree");
    modulus = ring.monic(modulus);
    auto t = std::shared_ptr<TowerField>(new TowerField(base_));
    t->degree_ = degree_;
    t->order_ = order_;
    t->modulus_ = modulus_;
    const unsigned d = degree_.back() * static_cast<unsigned>(modulus.size() - 1);
    t->degree_.push_back(d);
    Int q;
    mpz_pow_ui(q.get_mpz_t(), characteristic().get_mpz_t(), d);
    t->order_.push_back(q);
    t->modulus_.push_back(std::move(modulus));
    return t;
}

TowerField::Elem TowerField::embed(const Elem& a, int to) const {
    Elem out = a;
    out.resize(degree_.at(to), Int(0));
    return out;
}

TowerField::Elem TowerField::generator(int level) const {
    Elem out(degree_.at(level), Int(0));
    if (level == 0) {
        out[0] = 1;
        return out;
    }
    const auto& mod = modulus_.at(level);
    if (mod.size() == 2) return embed(sub(embed({Int(0)}, level - 1), mod[0]), level);
    out.at(degree_[level - 1]) = 1;
    return out;
}

TowerField::Elem TowerField::add(const Elem& a, const Elem& b) const {
    Elem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = base_.add(a[i], b[i]);
    return out;
}

TowerField::Elem TowerField::sub(const Elem& a, const Elem& b) const {
    Elem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = base_.sub(a[i], b[i]);
    return out;
}

std::vector<TowerField::Elem> TowerField::blocks(const Elem& a, int level) const {
    const unsigned inner = degree_.at(level - 1);
    const unsigned count = degree_.at(level) / inner;
    std::vector<Elem> out(count);
    for (unsigned j = 0; j < count; ++j) out[j].assign(a.begin() + j * inner, a.begin() + (j + 1) * inner);
    return out;
}

TowerField::Elem TowerField::from_blocks(const std::vector<Elem>& parts, int level) const {
    const unsigned inner = degree_.at(level - 1);
    Elem out(degree_.at(level), Int(0));
    for (size_t j = 0; j < parts.size(); ++j)
        for (unsigned k = 0; k < inner; ++k) out[j * inner + k] = parts[j][k];
    return out;
}

TowerField::Elem TowerField::mul(const Elem& a, const Elem& b, int level) const {
    if (level == 0) return {base_.mul(a[0], b[0])};
    PolyRing<TowerLevel> ring(field(level - 1));
    auto pa = blocks(a, level), pb = blocks(b, level);
    ring.trim(pa);
    ring.trim(pb);
    auto prod = ring.rem(ring.mul(pa, pb), modulus_[level]);
    prod.resize(degree_[level] / degree_[level - 1], field(level - 1).zero());
    return from_blocks(prod, level);
}

TowerField::Elem TowerField::inv(const Elem& a, int level) const {
    TowerLevel k = field(level);
    if (k.is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of zero in a tower field");
    if (level == 0) return {base_.inv(a[0])};
    PolyRing<TowerLevel> ring(field(level - 1));
    auto r0 = modulus_[level];
    auto r1 = blocks(a, level);
    ring.trim(r1);
    PolyRing<TowerLevel>::Poly s0, s1 = ring.one();
    while (!r1.empty()) {
        auto [q, r] = ring.divrem(r0, r1);
        auto s2 = ring.sub(s0, ring.mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    auto inv_lead = field(level - 1).inv(r0[0]);
    auto out = ring.rem(ring.scale(s0, inv_lead), modulus_[level]);
    out.resize(degree_[level] / degree_[level - 1], field(level - 1).zero());
    return from_blocks(out, level);
}

const Int& TowerLevel::characteristic() const { return tower_->characteristic(); }
const Int& TowerLevel::order() const { return tower_->order(level_); }
unsigned TowerLevel::extension_degree() const { return tower_->degree(level_); }

TowerLevel::Elem TowerLevel::zero() const { return Elem(tower_->degree(level_), Int(0)); }
TowerLevel::Elem TowerLevel::one() const { return tower_->embed({Int(1)}, level_); }
TowerLevel::Elem TowerLevel::from_int(const Int& z) const {
    return tower_->embed({tower_->base().from_int(z)}, level_);
}
bool TowerLevel::is_zero(const Elem& a) const {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}
TowerLevel::Elem TowerLevel::add(const Elem& a, const Elem& b) const { return tower_->add(a, b); }
TowerLevel::Elem TowerLevel::sub(const Elem& a, const Elem& b) const { return tower_->sub(a, b); }
TowerLevel::Elem TowerLevel::neg(const Elem& a) const { return tower_->sub(zero(), a); }
TowerLevel::Elem TowerLevel::mul(const Elem& a, const Elem& b) const { return tower_->mul(a, b, level_); }
TowerLevel::Elem TowerLevel::inv(const Elem& a) const { return tower_->inv(a, level_); }

TowerLevel::Elem TowerLevel::pow(const Elem& a, long e) const {
    Elem base = e < 0 ? inv(a) : a;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Elem result = one();
    while (k) {
        if (k & 1u) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

TowerLevel::Elem TowerLevel::pth_root(const Elem& a) const {
    // a^(q/p)
    Int e = order() / characteristic();
    Elem result = one(), base = a;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

TowerLevel::Elem TowerLevel::random(gmp_randclass& rng) const {
    Elem out(tower_->degree(level_));
    for (auto& c : out) c = tower_->base().random(rng);
    return out;
}

}  // namespace csa::ff
