/* json_io.cpp -- JSON reading and writing for automata, relations and sets. */

#include "fuzzaut/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fuzzaut {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// Converts a byte offset reported by the JSON parser into "line L, column C"
/// (1-based) by scanning the text.
std::string describe_position(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min(byte, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    std::ostringstream out;
    out << "line " << line << ", column " << column;
    return out.str();
}

json parse_text(const std::string& text, const std::string& origin)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        // err.byte is the 1-based byte offset of the problem.
        const std::size_t byte = err.byte > 0 ? err.byte - 1 : 0;
        throw ParseError(origin + ": malformed JSON at " + describe_position(text, byte)
                         + ": " + err.what());
    }
}

const json& require_field(const json& node, const std::string& key,
                          const std::string& path)
{
    auto it = node.find(key);
    if (it == node.end())
        throw ParseError(path + ": missing required field \"" + key + "\"");
    return *it;
}

void require_object(const json& node, const std::string& path)
{
    if (!node.is_object())
        throw ParseError(path + ": expected a JSON object");
}

void require_array(const json& node, const std::string& path)
{
    if (!node.is_array())
        throw ParseError(path + ": expected a JSON array");
}

std::string require_string(const json& node, const std::string& path)
{
    if (!node.is_string())
        throw ParseError(path + ": expected a string");
    return node.get<std::string>();
}

/// Parses one truth value. Strings go through the lattice parser; JSON
/// integers and booleans are accepted directly; floats are rejected because
/// they are inexact.
Value parse_value(const Lattice& lattice, const json& node, const std::string& path)
{
    try {
        if (node.is_string())
            return lattice.parse(node.get<std::string>());
        if (node.is_boolean())
            return lattice.parse(node.get<bool>() ? "true" : "false");
        if (node.is_number_integer())
            return lattice.make(Rational(node.get<long long>()));
        if (node.is_number_unsigned())
            return lattice.make(Rational(node.get<unsigned long long>()));
        if (node.is_number_float())
            throw ParseError(path + ": non-integer JSON numbers are inexact; "
                             "write the value as a string like \"7/10\" or \"0.7\"");
        throw ParseError(path + ": expected a truth value (string, integer or boolean)");
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        throw ParseError(path + ": " + err.what());
    }
}

FuzzySet parse_set(const Lattice& lattice, const json& node, const std::string& path)
{
    require_array(node, path);
    std::vector<Value> values;
    values.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i)
        values.push_back(parse_value(lattice, node[i],
                                     path + "[" + std::to_string(i) + "]"));
    return make_set(lattice, values);
}

FuzzyRelation parse_matrix(const Lattice& lattice, const json& node,
                           const std::string& path)
{
    require_array(node, path);
    if (node.empty()) {
        FuzzyRelation r;
        r.desc = lattice.descriptor();
        return r;
    }
    const std::size_t rows = node.size();
    std::size_t cols = 0;
    FuzzyRelation r;
    r.desc = lattice.descriptor();
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        require_array(node[i], row_path);
        if (i == 0) {
            cols = node[i].size();
        } else if (node[i].size() != cols) {
            throw ParseError(row_path + ": row has " + std::to_string(node[i].size())
                             + " entries, but the first row has " + std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j)
            r.entries.push_back(parse_value(lattice, node[i][j],
                                            row_path + "[" + std::to_string(j) + "]"));
    }
    r.rows = rows;
    r.cols = cols;
    return r;
}

Lattice parse_lattice(const json& node, const std::string& path)
{
    require_object(node, path);
    const std::string kind_text =
        require_string(require_field(node, "kind", path), path + ".kind");
    LatticeDescriptor desc;
    try {
        desc.kind = lattice_kind_from_string(kind_text);
    } catch (const Error& err) {
        throw ParseError(path + ".kind: " + err.what());
    }
    if (desc.kind == LatticeKind::chain) {
        const json& size_node = require_field(node, "size", path);
        if (!size_node.is_number_integer() && !size_node.is_number_unsigned())
            throw ParseError(path + ".size: expected an integer");
        const long long size = size_node.get<long long>();
        if (size < 1)
            throw ParseError(path + ".size: a chain needs at least one element");
        desc.size = static_cast<int>(size);
    } else if (node.contains("size")) {
        throw ParseError(path + ".size: only the chain lattice takes a size");
    }
    try {
        return Lattice(desc);
    } catch (const Error& err) {
        throw ParseError(path + ": " + err.what());
    }
}

std::vector<std::string> parse_name_list(const json& node, const std::string& path)
{
    require_array(node, path);
    std::vector<std::string> names;
    names.reserve(node.size());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < node.size(); ++i) {
        const std::string item_path = path + "[" + std::to_string(i) + "]";
        std::string name = require_string(node[i], item_path);
        if (name.empty())
            throw ParseError(item_path + ": names must be non-empty");
        if (!seen.insert(name).second)
            throw ParseError(item_path + ": duplicate name \"" + name + "\"");
        names.push_back(std::move(name));
    }
    return names;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

AutomatonFile parse_automaton(const std::string& text, const std::string& origin)
{
    const json doc = parse_text(text, origin);
    require_object(doc, origin);

    Lattice lattice = parse_lattice(require_field(doc, "lattice", origin),
                                    origin + ": lattice");

    FuzzyAutomaton a;
    a.desc = lattice.descriptor();
    a.alphabet = parse_name_list(require_field(doc, "alphabet", origin), "alphabet");
    a.states = parse_name_list(require_field(doc, "states", origin), "states");
    a.sigma = parse_set(lattice, require_field(doc, "sigma", origin), "sigma");
    a.tau = parse_set(lattice, require_field(doc, "tau", origin), "tau");

    const json& delta = require_field(doc, "delta", origin);
    require_object(delta, "delta");
    for (const auto& item : delta.items()) {
        if (std::find(a.alphabet.begin(), a.alphabet.end(), item.key())
            == a.alphabet.end())
            throw ParseError("delta." + item.key()
                             + ": symbol is not in the alphabet");
    }
    a.delta.reserve(a.alphabet.size());
    for (const std::string& symbol : a.alphabet) {
        auto it = delta.find(symbol);
        if (it == delta.end())
            throw ParseError("delta: missing matrix for symbol \"" + symbol + "\"");
        a.delta.push_back(parse_matrix(lattice, *it, "delta." + symbol));
    }

    try {
        validate_automaton(lattice, a);
    } catch (const Error& err) {
        throw ParseError(origin + ": " + err.what());
    }
    return AutomatonFile{std::move(lattice), std::move(a)};
}

AutomatonFile load_automaton(const std::string& path)
{
    return parse_automaton(read_file(path), path);
}

FuzzyRelation parse_relation(const std::string& text, const Lattice& lattice,
                             const std::string& origin)
{
    const json doc = parse_text(text, origin);
    if (doc.is_array())
        return parse_matrix(lattice, doc, "entries");
    require_object(doc, origin);
    Lattice declared = parse_lattice(require_field(doc, "lattice", origin),
                                     origin + ": lattice");
    if (!(declared == lattice))
        throw ParseError(origin + ": relation lattice does not match the automaton's");
    return parse_matrix(lattice, require_field(doc, "entries", origin), "entries");
}

FuzzyRelation load_relation(const std::string& path, const Lattice& lattice)
{
    return parse_relation(read_file(path), lattice, path);
}

RelationFile parse_standalone_relation(const std::string& text, const std::string& origin)
{
    const json doc = parse_text(text, origin);
    if (!doc.is_object())
        throw ParseError(origin + ": a self-describing relation must be an object "
                         "{\"lattice\": ..., \"entries\": [[...]]}");
    Lattice lattice = parse_lattice(require_field(doc, "lattice", origin),
                                    origin + ": lattice");
    FuzzyRelation r = parse_matrix(lattice, require_field(doc, "entries", origin),
                                   "entries");
    return RelationFile{std::move(lattice), std::move(r)};
}

RelationFile load_standalone_relation(const std::string& path)
{
    return parse_standalone_relation(read_file(path), path);
}

ordered_json value_to_json(const Lattice& lattice, const Value& v)
{
    switch (lattice.kind()) {
    case LatticeKind::boolean:
        return v.payload != 0;
    case LatticeKind::chain:
        return static_cast<long long>(numerator(v.payload));
    default:
        return lattice.format(v);
    }
}

ordered_json set_to_json(const Lattice& lattice, const FuzzySet& f)
{
    ordered_json out = ordered_json::array();
    for (const Value& v : f.values)
        out.push_back(value_to_json(lattice, v));
    return out;
}

ordered_json matrix_to_json(const Lattice& lattice, const FuzzyRelation& r)
{
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < r.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < r.cols; ++j)
            row.push_back(value_to_json(lattice, r.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

ordered_json lattice_to_json(const Lattice& lattice)
{
    ordered_json out;
    out["kind"] = to_string(lattice.kind());
    if (lattice.kind() == LatticeKind::chain)
        out["size"] = lattice.descriptor().size;
    return out;
}

ordered_json relation_to_json(const Lattice& lattice, const FuzzyRelation& r)
{
    ordered_json out;
    out["lattice"] = lattice_to_json(lattice);
    out["entries"] = matrix_to_json(lattice, r);
    return out;
}

ordered_json automaton_to_json(const Lattice& lattice, const FuzzyAutomaton& a)
{
    ordered_json out;
    out["lattice"] = lattice_to_json(lattice);
    out["alphabet"] = a.alphabet;
    out["states"] = a.states;
    out["sigma"] = set_to_json(lattice, a.sigma);
    out["tau"] = set_to_json(lattice, a.tau);
    ordered_json delta;
    for (std::size_t x = 0; x < a.alphabet.size(); ++x)
        delta[a.alphabet[x]] = matrix_to_json(lattice, a.delta[x]);
    out["delta"] = std::move(delta);
    return out;
}

std::string render_json(const ordered_json& doc)
{
    return doc.dump(2) + "\n";
}

} // namespace fuzzaut
