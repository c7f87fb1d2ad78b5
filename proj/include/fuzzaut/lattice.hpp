/* lattice.hpp -- Complete residuated lattice structures over exact values.
 *
 * Five concrete structures on a linearly ordered carrier:
 *   boolean      {0,1}
 *   godel        [0,1] with x(*)y = min(x,y),        x->y = 1 if x<=y else y
 *   lukasiewicz  [0,1] with x(*)y = max(x+y-1,0),    x->y = min(1-x+y,1)
 *   product      [0,1] with x(*)y = x*y,             x->y = 1 if x<=y else y/x
 *   chain        {a_0,...,a_n} by index, a_k(*)a_l = a_{max(k+l-n,0)},
 *                                        a_k->a_l = a_{min(n-k+l,n)}
 *
 * All arithmetic is exact: unit-interval values are arbitrary-precision
 * rationals, chain values are integer indices. Tensor and residuum form an
 * adjoint pair (x(*)y <= z iff x <= y->z), which everything downstream
 * depends on.
 */

#ifndef FUZZAUT_LATTICE_HPP_
#define FUZZAUT_LATTICE_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fuzzaut {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Value outside the carrier, mixed-structure operands, bad descriptor.
class LatticeError : public Error {
public:
    using Error::Error;
};

/// Incompatible shapes in an aggregate operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

enum class LatticeKind { boolean, godel, lukasiewicz, product, chain };

/// Identifies a lattice structure. `size` is meaningful for chains only and
/// counts the elements (indices run 0..size-1).
struct LatticeDescriptor {
    LatticeKind kind = LatticeKind::godel;
    int size = 0;

    bool operator==(const LatticeDescriptor&) const = default;
};

std::string to_string(LatticeKind kind);
LatticeKind lattice_kind_from_string(const std::string& name);

/// One truth value. Chain values store their index as an integer rational.
/// Every value remembers its structure so that cross-structure arithmetic is
/// rejected instead of silently computed.
struct Value {
    Rational payload;
    LatticeDescriptor desc;

    bool operator==(const Value& other) const {
        return desc == other.desc && payload == other.payload;
    }
    bool operator!=(const Value& other) const { return !(*this == other); }
};

/// A complete residuated lattice: a validated descriptor plus its operations.
/// All operations are pure; values are checked against the descriptor.
class Lattice {
public:
    explicit Lattice(LatticeDescriptor desc);
    /// Convenience form: Lattice(LatticeKind::godel), Lattice(LatticeKind::chain, 5).
    explicit Lattice(LatticeKind kind, int size = 0) : Lattice(LatticeDescriptor{kind, size}) {}

    const LatticeDescriptor& descriptor() const { return desc_; }
    LatticeKind kind() const { return desc_.kind; }

    Value zero() const;
    Value one() const;

    /// Wraps a rational as a value of this lattice (chain: integer index).
    /// Throws LatticeError when the payload is outside the carrier.
    Value make(const Rational& payload) const;

    bool is_valid(const Value& v) const;

    bool leq(const Value& a, const Value& b) const;
    bool lt(const Value& a, const Value& b) const;

    Value meet(const Value& a, const Value& b) const;
    Value join(const Value& a, const Value& b) const;

    /// Monoidal product x(*)y.
    Value tensor(const Value& a, const Value& b) const;
    /// Residuum x->y: the greatest z with x(*)z <= y.
    Value residuum(const Value& a, const Value& b) const;
    /// Biresiduum (x->y) meet (y->x); equals 1 iff x = y.
    Value biresiduum(const Value& a, const Value& b) const;

    /// Renders a value exactly: reduced fraction ("7/10", "1") for the unit
    /// interval and booleans, bare index ("2") for chains.
    std::string format(const Value& v) const;

    /// Parses "7/10", "0.7", "1", "true"/"false" (boolean), "2" (chain).
    /// Throws LatticeError on malformed text or out-of-carrier values.
    Value parse(const std::string& text) const;

    bool operator==(const Lattice& other) const { return desc_ == other.desc_; }

private:
    void check_operand(const Value& v, const char* op) const;

    LatticeDescriptor desc_;
};

/// Parses decimal or fraction text into an exact rational ("0.7" -> 7/10).
Rational rational_from_string(const std::string& text);

/// Renders a rational as a reduced fraction, "num/den" or plain "num".
std::string rational_to_string(const Rational& q);

} // namespace fuzzaut

#endif // FUZZAUT_LATTICE_HPP_
