#ifndef CFC_RNG_HPP
#define CFC_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace cfc {

// All library randomness funnels through these helpers. mt19937_64 has a
// fully specified output stream, but the standard distributions do not, so
// drawing through them would tie emitted files to one standard library.

// Uniform integer in [1, n] by rejection from the top bits.
inline int uniform_int(std::mt19937_64& rng, int n) {
    const uint64_t range = static_cast<uint64_t>(n);
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % range);
    for (;;) {
        uint64_t draw = rng();
        if (draw < limit) return static_cast<int>(draw % range) + 1;
    }
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates with the rejection sampler above.
template <class T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(uniform_int(rng, static_cast<int>(i))) - 1;
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace cfc

#endif
