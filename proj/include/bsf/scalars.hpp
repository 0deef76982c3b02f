#ifndef BSF_SCALARS_HPP
#define BSF_SCALARS_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bsf {

// Exact scalar field for all structural claims.
using Rat = mpq_class;
// Floating field for the spectral backend.
using Cplx = std::complex<double>;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q" or a decimal-free integer string.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }
inline Cplx to_cplx(const Rat& r) { return Cplx(r.get_d(), 0.0); }

template <class T> struct field;

template <> struct field<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long v) { return Rat(v); }
    static bool is_zero(const Rat& x) { return sgn(x) == 0; }
    static Rat conj(const Rat& x) { return x; }
    static constexpr bool exact = true;
    static constexpr bool complex_capable = false;
    static const char* name() { return "rational"; }
};

template <> struct field<Cplx> {
    static Cplx zero() { return Cplx(0, 0); }
    static Cplx one() { return Cplx(1, 0); }
    static Cplx from_int(long v) { return Cplx(double(v), 0); }
    static bool is_zero(const Cplx& x) { return x == Cplx(0, 0); }
    static Cplx conj(const Cplx& x) { return std::conj(x); }
    static constexpr bool exact = false;
    static constexpr bool complex_capable = true;
    static const char* name() { return "complex"; }
};

}  // namespace bsf

#endif
