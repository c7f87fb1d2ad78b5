/* lattice.cpp -- Residuated lattice operations with exact arithmetic. */

#include "fuzzaut/lattice.hpp"

#include <cctype>

namespace fuzzaut {

std::string to_string(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::boolean: return "boolean";
        case LatticeKind::godel: return "godel";
        case LatticeKind::lukasiewicz: return "lukasiewicz";
        case LatticeKind::product: return "product";
        case LatticeKind::chain: return "chain";
    }
    throw LatticeError("unknown lattice kind");
}

LatticeKind lattice_kind_from_string(const std::string& name) {
    if (name == "boolean") return LatticeKind::boolean;
    if (name == "godel") return LatticeKind::godel;
    if (name == "lukasiewicz") return LatticeKind::lukasiewicz;
    if (name == "product") return LatticeKind::product;
    if (name == "chain") return LatticeKind::chain;
    throw LatticeError("unknown lattice kind \"" + name + "\"");
}

Lattice::Lattice(LatticeDescriptor desc) : desc_(desc) {
    if (desc_.kind == LatticeKind::chain) {
        if (desc_.size < 2)
            throw LatticeError("chain lattice needs size >= 2, got " +
                               std::to_string(desc_.size));
    } else if (desc_.size != 0) {
        throw LatticeError("size is only meaningful for chain lattices");
    }
}

Value Lattice::zero() const { return Value{Rational(0), desc_}; }

Value Lattice::one() const {
    if (desc_.kind == LatticeKind::chain)
        return Value{Rational(desc_.size - 1), desc_};
    return Value{Rational(1), desc_};
}

Value Lattice::make(const Rational& payload) const {
    Value v{payload, desc_};
    if (!is_valid(v)) {
        throw LatticeError("value " + rational_to_string(payload) +
                           " outside the carrier of lattice " + to_string(desc_.kind));
    }
    return v;
}

bool Lattice::is_valid(const Value& v) const {
    if (v.desc != desc_) return false;
    switch (desc_.kind) {
        case LatticeKind::boolean:
            return v.payload == 0 || v.payload == 1;
        case LatticeKind::godel:
        case LatticeKind::lukasiewicz:
        case LatticeKind::product:
            return v.payload >= 0 && v.payload <= 1;
        case LatticeKind::chain:
            return denominator(v.payload) == 1 && v.payload >= 0 &&
                   v.payload <= desc_.size - 1;
    }
    return false;
}

void Lattice::check_operand(const Value& v, const char* op) const {
    if (v.desc != desc_)
        throw LatticeError(std::string(op) + ": operand from a different lattice (" +
                           to_string(v.desc.kind) + " vs " + to_string(desc_.kind) + ")");
    if (!is_valid(v))
        throw LatticeError(std::string(op) + ": operand " +
                           rational_to_string(v.payload) + " outside carrier");
}

bool Lattice::leq(const Value& a, const Value& b) const {
    check_operand(a, "leq");
    check_operand(b, "leq");
    return a.payload <= b.payload;
}

bool Lattice::lt(const Value& a, const Value& b) const {
    check_operand(a, "lt");
    check_operand(b, "lt");
    return a.payload < b.payload;
}

Value Lattice::meet(const Value& a, const Value& b) const {
    check_operand(a, "meet");
    check_operand(b, "meet");
    return a.payload <= b.payload ? a : b;
}

Value Lattice::join(const Value& a, const Value& b) const {
    check_operand(a, "join");
    check_operand(b, "join");
    return a.payload >= b.payload ? a : b;
}

Value Lattice::tensor(const Value& a, const Value& b) const {
    check_operand(a, "tensor");
    check_operand(b, "tensor");
    switch (desc_.kind) {
        case LatticeKind::boolean:
        case LatticeKind::godel:
            return a.payload <= b.payload ? a : b;
        case LatticeKind::lukasiewicz: {
            Rational s = a.payload + b.payload - 1;
            return Value{s > 0 ? s : Rational(0), desc_};
        }
        case LatticeKind::product:
            return Value{a.payload * b.payload, desc_};
        case LatticeKind::chain: {
            Rational s = a.payload + b.payload - (desc_.size - 1);
            return Value{s > 0 ? s : Rational(0), desc_};
        }
    }
    throw LatticeError("tensor: unknown lattice kind");
}

Value Lattice::residuum(const Value& a, const Value& b) const {
    check_operand(a, "residuum");
    check_operand(b, "residuum");
    switch (desc_.kind) {
        case LatticeKind::boolean:
        case LatticeKind::godel:
            return a.payload <= b.payload ? one() : b;
        case LatticeKind::lukasiewicz: {
            Rational r = 1 - a.payload + b.payload;
            return Value{r < 1 ? r : Rational(1), desc_};
        }
        case LatticeKind::product:
            if (a.payload <= b.payload) return one();
            return Value{b.payload / a.payload, desc_};
        case LatticeKind::chain: {
            Rational r = (desc_.size - 1) - a.payload + b.payload;
            Rational top(desc_.size - 1);
            return Value{r < top ? r : top, desc_};
        }
    }
    throw LatticeError("residuum: unknown lattice kind");
}

Value Lattice::biresiduum(const Value& a, const Value& b) const {
    return meet(residuum(a, b), residuum(b, a));
}

std::string Lattice::format(const Value& v) const {
    check_operand(v, "format");
    return rational_to_string(v.payload);
}

Value Lattice::parse(const std::string& text) const {
    if (desc_.kind == LatticeKind::boolean) {
        if (text == "true") return one();
        if (text == "false") return zero();
    }
    return make(rational_from_string(text));
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw LatticeError("empty value text");
    std::size_t start = 0;
    bool negative = false;
    if (text[0] == '-') {
        negative = true;
        start = 1;
    } else if (text[0] == '+') {
        start = 1;
    }
    std::string body = text.substr(start);
    if (body.empty()) throw LatticeError("malformed value \"" + text + "\"");

    auto digits_only = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };

    Rational result;
    std::size_t slash = body.find('/');
    std::size_t dot = body.find('.');
    if (slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den))
            throw LatticeError("malformed fraction \"" + text + "\"");
        Integer d(den);
        if (d == 0) throw LatticeError("zero denominator in \"" + text + "\"");
        result = Rational(Integer(num), d);
    } else if (dot != std::string::npos) {
        std::string whole = body.substr(0, dot);
        std::string frac = body.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!digits_only(whole) || (!frac.empty() && !digits_only(frac)))
            throw LatticeError("malformed decimal \"" + text + "\"");
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer num = Integer(whole) * scale + (frac.empty() ? Integer(0) : Integer(frac));
        result = Rational(num, scale);
    } else {
        if (!digits_only(body))
            throw LatticeError("malformed value \"" + text + "\"");
        result = Rational(Integer(body));
    }
    if (negative) result = -result;
    return result;
}

std::string rational_to_string(const Rational& q) {
    Integer num = numerator(q);
    Integer den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace fuzzaut
