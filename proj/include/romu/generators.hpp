#pragma once

#include <cstdint>
#include <limits>

#include "romu/bits.hpp"
#include "romu/spec.hpp"

// Typed engines for the shipped full-size variants. These are the ones to
// embed in application code: branch-free next(), and an exact inverse
// step prev() (every variant is a bijection on its nonzero states).
//
// next() returns the pre-update output, so the caller never waits on the
// state update. Seeding only excludes the all-zeros state.

namespace romu {

class RomuQuad {
  public:
    using result_type = uint64_t;
    static constexpr uint64_t(min)() { return 0; }
    static constexpr uint64_t(max)() { return std::numeric_limits<uint64_t>::max(); }

    RomuQuad(uint64_t w, uint64_t x, uint64_t y, uint64_t z) : w_(w), x_(x), y_(y), z_(z) {}

    uint64_t next() {
        const uint64_t wp = w_, xp = x_, yp = y_, zp = z_;
        w_ = kMultiplier64 * zp;
        x_ = zp + rotl(wp, 52);
        y_ = yp - xp;
        z_ = yp + wp;
        z_ = rotl(z_, 19);
        return xp;
    }

    void prev() {
        const uint64_t zp = w_ * kInv;
        const uint64_t wp = rotr(x_ - zp, 52);
        const uint64_t yp = rotr(z_, 19) - wp;
        const uint64_t xp = yp - y_;
        w_ = wp; x_ = xp; y_ = yp; z_ = zp;
    }

    uint64_t operator()() { return next(); }
    uint64_t w() const { return w_; }
    uint64_t x() const { return x_; }
    uint64_t y() const { return y_; }
    uint64_t z() const { return z_; }

  private:
    static constexpr uint64_t kInv = mod_inverse(kMultiplier64);
    uint64_t w_, x_, y_, z_;
};

class RomuTrio {
  public:
    using result_type = uint64_t;
    static constexpr uint64_t(min)() { return 0; }
    static constexpr uint64_t(max)() { return std::numeric_limits<uint64_t>::max(); }

    RomuTrio(uint64_t x, uint64_t y, uint64_t z) : x_(x), y_(y), z_(z) {}

    uint64_t next() {
        const uint64_t xp = x_, yp = y_, zp = z_;
        x_ = kMultiplier64 * zp;
        y_ = rotl(yp - xp, 12);
        z_ = rotl(zp - yp, 44);
        return xp;
    }

    void prev() {
        const uint64_t zp = x_ * kInv;
        const uint64_t yp = zp - rotr(z_, 44);
        const uint64_t xp = yp - rotr(y_, 12);
        x_ = xp; y_ = yp; z_ = zp;
    }

    uint64_t operator()() { return next(); }
    uint64_t x() const { return x_; }
    uint64_t y() const { return y_; }
    uint64_t z() const { return z_; }

  private:
    static constexpr uint64_t kInv = mod_inverse(kMultiplier64);
    uint64_t x_, y_, z_;
};

class RomuDuo {
  public:
    using result_type = uint64_t;
    static constexpr uint64_t(min)() { return 0; }
    static constexpr uint64_t(max)() { return std::numeric_limits<uint64_t>::max(); }

    RomuDuo(uint64_t x, uint64_t y) : x_(x), y_(y) {}

    uint64_t next() {
        const uint64_t xp = x_;
        x_ = kMultiplier64 * y_;
        y_ = rotl(y_, 36) + rotl(y_, 15) - xp;
        return xp;
    }

    void prev() {
        const uint64_t yp = x_ * kInv;
        const uint64_t xp = rotl(yp, 36) + rotl(yp, 15) - y_;
        x_ = xp; y_ = yp;
    }

    uint64_t operator()() { return next(); }
    uint64_t x() const { return x_; }
    uint64_t y() const { return y_; }

  private:
    static constexpr uint64_t kInv = mod_inverse(kMultiplier64);
    uint64_t x_, y_;
};

class RomuDuoJr {
  public:
    using result_type = uint64_t;
    static constexpr uint64_t(min)() { return 0; }
    static constexpr uint64_t(max)() { return std::numeric_limits<uint64_t>::max(); }

    RomuDuoJr(uint64_t x, uint64_t y) : x_(x), y_(y) {}

    uint64_t next() {
        const uint64_t xp = x_;
        x_ = kMultiplier64 * y_;
        y_ = rotl(y_ - xp, 27);
        return xp;
    }

    void prev() {
        const uint64_t yp = x_ * kInv;
        const uint64_t xp = yp - rotr(y_, 27);
        x_ = xp; y_ = yp;
    }

    uint64_t operator()() { return next(); }
    uint64_t x() const { return x_; }
    uint64_t y() const { return y_; }

  private:
    static constexpr uint64_t kInv = mod_inverse(kMultiplier64);
    uint64_t x_, y_;
};

class RomuQuad32 {
  public:
    using result_type = uint32_t;
    static constexpr uint32_t(min)() { return 0; }
    static constexpr uint32_t(max)() { return std::numeric_limits<uint32_t>::max(); }

    RomuQuad32(uint32_t w, uint32_t x, uint32_t y, uint32_t z) : w_(w), x_(x), y_(y), z_(z) {}

    uint32_t next() {
        const uint32_t wp = w_, xp = x_, yp = y_, zp = z_;
        w_ = kMultiplier32 * zp;
        x_ = zp + rotl(wp, 26);
        y_ = yp - xp;
        z_ = yp + wp;
        z_ = rotl(z_, 9);
        return xp;
    }

    void prev() {
        const uint32_t zp = w_ * kInv;
        const uint32_t wp = rotr(static_cast<uint32_t>(x_ - zp), 26);
        const uint32_t yp = rotr(z_, 9) - wp;
        const uint32_t xp = yp - y_;
        w_ = wp; x_ = xp; y_ = yp; z_ = zp;
    }

    uint32_t operator()() { return next(); }
    uint32_t w() const { return w_; }
    uint32_t x() const { return x_; }
    uint32_t y() const { return y_; }
    uint32_t z() const { return z_; }

  private:
    static constexpr uint32_t kInv = static_cast<uint32_t>(mod_inverse(kMultiplier32, 32));
    uint32_t w_, x_, y_, z_;
};

class RomuTrio32 {
  public:
    using result_type = uint32_t;
    static constexpr uint32_t(min)() { return 0; }
    static constexpr uint32_t(max)() { return std::numeric_limits<uint32_t>::max(); }

    RomuTrio32(uint32_t x, uint32_t y, uint32_t z) : x_(x), y_(y), z_(z) {}

    uint32_t next() {
        const uint32_t xp = x_, yp = y_, zp = z_;
        x_ = kMultiplier32 * zp;
        y_ = rotl(static_cast<uint32_t>(yp - xp), 6);
        z_ = rotl(static_cast<uint32_t>(zp - yp), 22);
        return xp;
    }

    void prev() {
        const uint32_t zp = x_ * kInv;
        const uint32_t yp = zp - rotr(z_, 22);
        const uint32_t xp = yp - rotr(y_, 6);
        x_ = xp; y_ = yp; z_ = zp;
    }

    uint32_t operator()() { return next(); }
    uint32_t x() const { return x_; }
    uint32_t y() const { return y_; }
    uint32_t z() const { return z_; }

  private:
    static constexpr uint32_t kInv = static_cast<uint32_t>(mod_inverse(kMultiplier32, 32));
    uint32_t x_, y_, z_;
};

// 32-bit state, 16-bit output, multiply-then-rotate order. Period
// 2^32 - 47 when seeded through init (29 seed bits land inside the
// largest seed-block of the longest cycle).
class RomuMono32 {
  public:
    using result_type = uint16_t;
    static constexpr uint16_t(min)() { return 0; }
    static constexpr uint16_t(max)() { return std::numeric_limits<uint16_t>::max(); }

    explicit RomuMono32(uint32_t seed) : state_((seed & kMono32SeedMask) + kMono32SeedBase) {}

    static RomuMono32 from_state(uint32_t state) {
        RomuMono32 g(0);
        g.state_ = state;
        return g;
    }

    uint16_t next() {
        const uint16_t result = static_cast<uint16_t>(state_ >> 16);
        state_ *= kMono32Multiplier;
        state_ = rotl(state_, kMono32Rotation);
        return result;
    }

    void prev() { state_ = rotr(state_, kMono32Rotation) * kInv; }

    uint16_t operator()() { return next(); }
    uint32_t state() const { return state_; }

  private:
    static constexpr uint32_t kInv = static_cast<uint32_t>(mod_inverse(kMono32Multiplier, 32));
    uint32_t state_;
};

// The two-instruction 64-bit generator: rotate then multiply, low 32 bits
// of the pre-update state as output. Kept for reference; its 64-bit state
// is too small for serious use.
class RomuMono {
  public:
    using result_type = uint32_t;
    static constexpr uint32_t(min)() { return 0; }
    static constexpr uint32_t(max)() { return std::numeric_limits<uint32_t>::max(); }

    explicit RomuMono(uint64_t state) : state_(state) {}

    uint32_t next() {
        const uint32_t result = static_cast<uint32_t>(state_);
        state_ = rotl(state_, 32) * kMultiplier64;
        return result;
    }

    void prev() { state_ = rotr(state_ * kInv, 32); }

    uint32_t operator()() { return next(); }
    uint64_t state() const { return state_; }

  private:
    static constexpr uint64_t kInv = mod_inverse(kMultiplier64);
    uint64_t state_;
};

}  // namespace romu
