#pragma once

#include "qgrow/bitvec.hpp"

namespace qgrow {

enum class PauliType { X, Z };

inline PauliType opposite(PauliType t) { return t == PauliType::X ? PauliType::Z : PauliType::X; }
inline char type_char(PauliType t) { return t == PauliType::X ? 'X' : 'Z'; }

// A signed Pauli word sign * X^x * Z^z on n qubits, sign in {+1, -1}.
// Products of such words stay in this set up to the convention Y = XZ
// (phase i absorbed nowhere: we track only real signs, which is closed
// because every word we form has even XZ overlap with its partners or
// appears squared; the CSS constructions here never need the imaginary
// unit).
struct PauliWord {
    BitVector x;
    BitVector z;
    int sign = +1;

    PauliWord() = default;
    explicit PauliWord(std::size_t n) : x(n), z(n) {}
    PauliWord(BitVector x, BitVector z, int sign = +1)
        : x(std::move(x)), z(std::move(z)), sign(sign) {
        if (this->x.size() != this->z.size())
            throw std::invalid_argument("PauliWord: x/z length mismatch");
        if (sign != 1 && sign != -1) throw std::invalid_argument("PauliWord: sign must be +-1");
    }

    // Parse strings like "+XIZY" / "-IXZI"; optional leading sign.
    static PauliWord from_string(const std::string& s) {
        std::size_t start = 0;
        int sign = +1;
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
            sign = s[0] == '-' ? -1 : +1;
            start = 1;
        }
        std::size_t n = s.size() - start;
        PauliWord p(n);
        p.sign = sign;
        for (std::size_t i = 0; i < n; ++i) {
            switch (s[start + i]) {
                case 'I': break;
                case 'X': p.x.set(i, true); break;
                case 'Z': p.z.set(i, true); break;
                case 'Y':
                    p.x.set(i, true);
                    p.z.set(i, true);
                    break;
                default: throw std::invalid_argument("PauliWord: expected I/X/Y/Z");
            }
        }
        return p;
    }

    std::size_t n_qubits() const { return x.size(); }

    bool is_identity() const { return x.is_zero() && z.is_zero() && sign == +1; }

    bool pure_x() const { return z.is_zero(); }
    bool pure_z() const { return x.is_zero(); }

    std::size_t weight() const { return (x | z).weight(); }

    // (sign_a X^xa Z^za)(sign_b X^xb Z^zb) = sign_a sign_b (-1)^<za,xb> X^(xa+xb) Z^(za+zb)
    friend PauliWord operator*(const PauliWord& a, const PauliWord& b) {
        PauliWord p(a.x ^ b.x, a.z ^ b.z, a.sign * b.sign);
        if (a.z.dot(b.x)) p.sign = -p.sign;
        return p;
    }

    bool commutes_with(const PauliWord& o) const {
        return !(x.dot(o.z) ^ z.dot(o.x));
    }

    bool operator==(const PauliWord&) const = default;

    // Diagnostic rendering; overlapping X and Z bits print as Y.
    std::string to_string() const {
        std::string s = sign < 0 ? "-" : "+";
        for (std::size_t i = 0; i < n_qubits(); ++i) {
            bool xb = x.get(i), zb = z.get(i);
            s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
        }
        return s;
    }
};

inline bool symplectic_product(const PauliWord& a, const PauliWord& b) {
    return a.x.dot(b.z) ^ a.z.dot(b.x);
}

// Convenience constructors for pure-type words.
inline PauliWord x_word(const BitVector& support) {
    return PauliWord(support, BitVector(support.size()));
}
inline PauliWord z_word(const BitVector& support) {
    return PauliWord(BitVector(support.size()), support);
}

}  // namespace qgrow
