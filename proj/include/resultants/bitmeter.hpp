#pragma once

#include "resultants/rational.hpp"

#include <cstddef>

namespace resultants {

// Peak size of exact intermediates on the current thread, read by the benchmark driver.
class BitMeter {
public:
    static void note(std::size_t bits)
    {
        if (bits > peak_) peak_ = bits;
    }
    static void note(const Integer& z) { note(bit_length(z)); }
    static void note(const Rational& q) { note(bit_length(q)); }
    static std::size_t peak() { return peak_; }
    static void reset() { peak_ = 0; }

private:
    static inline thread_local std::size_t peak_ = 0;
};

}  // namespace resultants
