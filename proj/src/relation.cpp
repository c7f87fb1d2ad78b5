/* relation.cpp -- Implementation of exact fuzzy sets and relations. */

#include "fuzzaut/relation.hpp"

#include <utility>

namespace fuzzaut {

namespace {

void require_desc(const Lattice& lattice, const LatticeDescriptor& desc, const char* what) {
    if (!(lattice.descriptor() == desc)) {
        throw LatticeError(std::string(what) + " does not live in the given lattice (structure mismatch)");
    }
}

void require_same_shape(const FuzzyRelation& a, const FuzzyRelation& b, const char* op) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw DimensionError(std::string(op) + ": shape mismatch (" + std::to_string(a.rows) + "x" +
                             std::to_string(a.cols) + " vs " + std::to_string(b.rows) + "x" +
                             std::to_string(b.cols) + ")");
    }
}

void require_same_size(const FuzzySet& a, const FuzzySet& b, const char* op) {
    if (a.size() != b.size()) {
        throw DimensionError(std::string(op) + ": size mismatch (" + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()) + ")");
    }
}

void require_square(const FuzzyRelation& r, const char* op) {
    if (r.rows != r.cols) {
        throw DimensionError(std::string(op) + ": relation must be square, got " +
                             std::to_string(r.rows) + "x" + std::to_string(r.cols));
    }
}

} // namespace

FuzzySet make_set(const Lattice& lattice, std::size_t n) {
    FuzzySet f;
    f.desc = lattice.descriptor();
    f.values.assign(n, lattice.zero());
    return f;
}

FuzzySet make_set(const Lattice& lattice, const std::vector<Value>& values) {
    FuzzySet f;
    f.desc = lattice.descriptor();
    f.values = values;
    for (const Value& v : f.values) {
        if (!lattice.is_valid(v)) {
            throw LatticeError("fuzzy set entry " + lattice.format(v) + " is not a lattice element");
        }
    }
    return f;
}

FuzzyRelation make_relation(const Lattice& lattice, std::size_t rows, std::size_t cols) {
    FuzzyRelation r;
    r.desc = lattice.descriptor();
    r.rows = rows;
    r.cols = cols;
    r.entries.assign(rows * cols, lattice.zero());
    return r;
}

FuzzyRelation identity_relation(const Lattice& lattice, std::size_t n) {
    FuzzyRelation r = make_relation(lattice, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        r.at(i, i) = lattice.one();
    }
    return r;
}

bool is_empty(const FuzzyRelation& rel) {
    for (const Value& v : rel.entries) {
        if (v.payload != 0) {
            return false;
        }
    }
    return true;
}

FuzzyRelation compose(const Lattice& lattice, const FuzzyRelation& a, const FuzzyRelation& b) {
    require_desc(lattice, a.desc, "left composition operand");
    require_desc(lattice, b.desc, "right composition operand");
    if (a.cols != b.rows) {
        throw DimensionError("compose: inner dimensions differ (" + std::to_string(a.cols) +
                             " vs " + std::to_string(b.rows) + ")");
    }
    FuzzyRelation out = make_relation(lattice, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < b.cols; ++k) {
            Value acc = lattice.zero();
            for (std::size_t j = 0; j < a.cols; ++j) {
                acc = lattice.join(acc, lattice.tensor(a.at(i, j), b.at(j, k)));
            }
            out.at(i, k) = acc;
        }
    }
    return out;
}

FuzzySet compose(const Lattice& lattice, const FuzzySet& f, const FuzzyRelation& r) {
    require_desc(lattice, f.desc, "left composition operand");
    require_desc(lattice, r.desc, "right composition operand");
    if (f.size() != r.rows) {
        throw DimensionError("compose: set size " + std::to_string(f.size()) +
                             " does not match relation rows " + std::to_string(r.rows));
    }
    FuzzySet out = make_set(lattice, r.cols);
    for (std::size_t k = 0; k < r.cols; ++k) {
        Value acc = lattice.zero();
        for (std::size_t j = 0; j < r.rows; ++j) {
            acc = lattice.join(acc, lattice.tensor(f.at(j), r.at(j, k)));
        }
        out.at(k) = acc;
    }
    return out;
}

FuzzySet compose(const Lattice& lattice, const FuzzyRelation& r, const FuzzySet& f) {
    require_desc(lattice, r.desc, "left composition operand");
    require_desc(lattice, f.desc, "right composition operand");
    if (r.cols != f.size()) {
        throw DimensionError("compose: relation cols " + std::to_string(r.cols) +
                             " do not match set size " + std::to_string(f.size()));
    }
    FuzzySet out = make_set(lattice, r.rows);
    for (std::size_t i = 0; i < r.rows; ++i) {
        Value acc = lattice.zero();
        for (std::size_t j = 0; j < r.cols; ++j) {
            acc = lattice.join(acc, lattice.tensor(r.at(i, j), f.at(j)));
        }
        out.at(i) = acc;
    }
    return out;
}

Value compose(const Lattice& lattice, const FuzzySet& f, const FuzzySet& g) {
    require_desc(lattice, f.desc, "left composition operand");
    require_desc(lattice, g.desc, "right composition operand");
    require_same_size(f, g, "compose");
    Value acc = lattice.zero();
    for (std::size_t i = 0; i < f.size(); ++i) {
        acc = lattice.join(acc, lattice.tensor(f.at(i), g.at(i)));
    }
    return acc;
}

FuzzyRelation inverse(const FuzzyRelation& r) {
    FuzzyRelation out;
    out.desc = r.desc;
    out.rows = r.cols;
    out.cols = r.rows;
    out.entries.resize(r.entries.size(), Value{0, r.desc});
    for (std::size_t i = 0; i < r.rows; ++i) {
        for (std::size_t j = 0; j < r.cols; ++j) {
            out.at(j, i) = r.at(i, j);
        }
    }
    return out;
}

FuzzyRelation meet(const Lattice& lattice, const FuzzyRelation& a, const FuzzyRelation& b) {
    require_desc(lattice, a.desc, "meet operand");
    require_desc(lattice, b.desc, "meet operand");
    require_same_shape(a, b, "meet");
    FuzzyRelation out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
        out.entries[i] = lattice.meet(a.entries[i], b.entries[i]);
    }
    return out;
}

FuzzyRelation join(const Lattice& lattice, const FuzzyRelation& a, const FuzzyRelation& b) {
    require_desc(lattice, a.desc, "join operand");
    require_desc(lattice, b.desc, "join operand");
    require_same_shape(a, b, "join");
    FuzzyRelation out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
        out.entries[i] = lattice.join(a.entries[i], b.entries[i]);
    }
    return out;
}

FuzzySet meet(const Lattice& lattice, const FuzzySet& a, const FuzzySet& b) {
    require_desc(lattice, a.desc, "meet operand");
    require_desc(lattice, b.desc, "meet operand");
    require_same_size(a, b, "meet");
    FuzzySet out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = lattice.meet(a.values[i], b.values[i]);
    }
    return out;
}

FuzzySet join(const Lattice& lattice, const FuzzySet& a, const FuzzySet& b) {
    require_desc(lattice, a.desc, "join operand");
    require_desc(lattice, b.desc, "join operand");
    require_same_size(a, b, "join");
    FuzzySet out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        out.values[i] = lattice.join(a.values[i], b.values[i]);
    }
    return out;
}

bool leq(const Lattice& lattice, const FuzzyRelation& a, const FuzzyRelation& b) {
    return !first_excess(lattice, a, b).has_value();
}

bool leq(const Lattice& lattice, const FuzzySet& a, const FuzzySet& b) {
    return !first_excess(lattice, a, b).has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> first_excess(const Lattice& lattice,
                                                                const FuzzyRelation& a,
                                                                const FuzzyRelation& b) {
    require_desc(lattice, a.desc, "order operand");
    require_desc(lattice, b.desc, "order operand");
    require_same_shape(a, b, "order check");
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) {
            if (!lattice.leq(a.at(i, j), b.at(i, j))) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> first_excess(const Lattice& lattice, const FuzzySet& a,
                                        const FuzzySet& b) {
    require_desc(lattice, a.desc, "order operand");
    require_desc(lattice, b.desc, "order operand");
    require_same_size(a, b, "order check");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!lattice.leq(a.at(i), b.at(i))) {
            return i;
        }
    }
    return std::nullopt;
}

FuzzyRelation right_residual(const Lattice& lattice, const FuzzyRelation& w,
                             const FuzzyRelation& v) {
    require_desc(lattice, w.desc, "residual operand");
    require_desc(lattice, v.desc, "residual operand");
    if (w.cols != v.cols) {
        throw DimensionError("right_residual: column counts differ (" + std::to_string(w.cols) +
                             " vs " + std::to_string(v.cols) + ")");
    }
    FuzzyRelation out = make_relation(lattice, w.rows, v.rows);
    for (std::size_t a = 0; a < w.rows; ++a) {
        for (std::size_t b = 0; b < v.rows; ++b) {
            Value acc = lattice.one();
            for (std::size_t c = 0; c < w.cols; ++c) {
                acc = lattice.meet(acc, lattice.residuum(v.at(b, c), w.at(a, c)));
            }
            out.at(a, b) = acc;
        }
    }
    return out;
}

FuzzyRelation left_residual(const Lattice& lattice, const FuzzyRelation& v,
                            const FuzzyRelation& w) {
    require_desc(lattice, v.desc, "residual operand");
    require_desc(lattice, w.desc, "residual operand");
    if (v.rows != w.rows) {
        throw DimensionError("left_residual: row counts differ (" + std::to_string(v.rows) +
                             " vs " + std::to_string(w.rows) + ")");
    }
    FuzzyRelation out = make_relation(lattice, v.cols, w.cols);
    for (std::size_t b = 0; b < v.cols; ++b) {
        for (std::size_t c = 0; c < w.cols; ++c) {
            Value acc = lattice.one();
            for (std::size_t a = 0; a < v.rows; ++a) {
                acc = lattice.meet(acc, lattice.residuum(v.at(a, b), w.at(a, c)));
            }
            out.at(b, c) = acc;
        }
    }
    return out;
}

FuzzyRelation crisp_part(const Lattice& lattice, const FuzzyRelation& r) {
    require_desc(lattice, r.desc, "crisp part operand");
    FuzzyRelation out = r;
    for (Value& v : out.entries) {
        v = (v == lattice.one()) ? lattice.one() : lattice.zero();
    }
    return out;
}

FuzzySet crisp_part(const Lattice& lattice, const FuzzySet& f) {
    require_desc(lattice, f.desc, "crisp part operand");
    FuzzySet out = f;
    for (Value& v : out.values) {
        v = (v == lattice.one()) ? lattice.one() : lattice.zero();
    }
    return out;
}

EquivalenceReport classify_equivalence(const Lattice& lattice, const FuzzyRelation& r) {
    require_desc(lattice, r.desc, "equivalence operand");
    require_square(r, "classify_equivalence");
    const std::size_t n = r.rows;

    EquivalenceReport report;
    report.reflexive = true;
    report.symmetric = true;
    report.transitive = true;

    auto record = [&report](const char* property, std::vector<std::size_t> coords) {
        if (report.failed_property.empty()) {
            report.failed_property = property;
            report.violation = std::move(coords);
        }
    };

    for (std::size_t a = 0; a < n && report.reflexive; ++a) {
        if (!(r.at(a, a) == lattice.one())) {
            report.reflexive = false;
            record("reflexive", {a});
        }
    }
    for (std::size_t a = 0; a < n && report.symmetric; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!(r.at(a, b) == r.at(b, a))) {
                report.symmetric = false;
                record("symmetric", {a, b});
                break;
            }
        }
    }
    for (std::size_t a = 0; a < n && report.transitive; ++a) {
        for (std::size_t b = 0; b < n && report.transitive; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (!lattice.leq(lattice.tensor(r.at(a, b), r.at(b, c)), r.at(a, c))) {
                    report.transitive = false;
                    record("transitive", {a, b, c});
                    break;
                }
            }
        }
    }
    return report;
}

void validate_equivalence(const Lattice& lattice, const FuzzyRelation& r,
                          const std::string& what) {
    EquivalenceReport report = classify_equivalence(lattice, r);
    if (!report.is_equivalence()) {
        std::string coords;
        for (std::size_t i = 0; i < report.violation.size(); ++i) {
            coords += (i ? "," : "") + std::to_string(report.violation[i]);
        }
        throw Error(what + " is not a fuzzy equivalence: " + report.failed_property +
                    " fails at (" + coords + ")");
    }
}

FactorSet factor_set(const Lattice& lattice, const FuzzyRelation& e) {
    validate_equivalence(lattice, e, "factor_set argument");
    FactorSet fs;
    fs.class_of.assign(e.rows, 0);
    for (std::size_t a = 0; a < e.rows; ++a) {
        bool placed = false;
        for (std::size_t k = 0; k < fs.representatives.size(); ++k) {
            if (e.at(fs.representatives[k], a) == lattice.one()) {
                fs.class_of[a] = k;
                placed = true;
                break;
            }
        }
        if (!placed) {
            fs.class_of[a] = fs.representatives.size();
            fs.representatives.push_back(a);
        }
    }
    return fs;
}

std::vector<FuzzySet> factor_classes(const Lattice& lattice, const FuzzyRelation& e,
                                     const FactorSet& fs) {
    require_desc(lattice, e.desc, "factor class operand");
    std::vector<FuzzySet> classes;
    classes.reserve(fs.index());
    for (std::size_t rep : fs.representatives) {
        FuzzySet cls = make_set(lattice, e.cols);
        for (std::size_t a = 0; a < e.cols; ++a) {
            cls.at(a) = e.at(rep, a);
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

FuzzyRelation factor_tilde(const Lattice& lattice, const FuzzyRelation& e, const FactorSet& fs) {
    require_desc(lattice, e.desc, "factor equality operand");
    FuzzyRelation out = make_relation(lattice, fs.index(), fs.index());
    for (std::size_t i = 0; i < fs.index(); ++i) {
        for (std::size_t j = 0; j < fs.index(); ++j) {
            out.at(i, j) = e.at(fs.representatives[i], fs.representatives[j]);
        }
    }
    return out;
}

} // namespace fuzzaut
