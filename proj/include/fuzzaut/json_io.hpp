/* json_io.hpp -- JSON reading and writing for automata, relations and sets.
 *
 * Automaton file format:
 *   {
 *     "lattice":  {"kind": "godel"},            // or boolean | lukasiewicz
 *                                               //    | product | chain
 *                                               // chain additionally: "size"
 *     "alphabet": ["x", "y"],
 *     "states":   ["p", "q", "r"],
 *     "sigma":    ["1", "1/2", 0],
 *     "tau":      ["3/5", 0, 0],
 *     "delta":    {"x": [[...], [...], [...]], "y": [[...], [...], [...]]}
 *   }
 *
 * Truth values are written as exact-rational strings ("0.7" and "7/10" both
 * work), JSON integers, or true/false for the Boolean lattice; chain values
 * are element indices. Non-integer JSON numbers are rejected because binary
 * floating point cannot represent most decimal fractions exactly.
 *
 * Relation files are either an object {"lattice": {...}, "entries": [[...]]}
 * or a bare matrix [[...]] interpreted in the lattice of the automaton it
 * accompanies; writers always emit the object form.
 */

#ifndef FUZZAUT_JSON_IO_HPP_
#define FUZZAUT_JSON_IO_HPP_

#include "fuzzaut/automaton.hpp"

#include <json.hpp>

#include <string>

namespace fuzzaut {

/// Input-file problem: malformed JSON (with line/column), a missing or
/// ill-typed field (with its path, e.g. "delta.x[1][0]"), a dimension
/// mismatch, or a value outside the lattice carrier.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// An automaton together with the lattice its file declared.
struct AutomatonFile {
    Lattice lattice;
    FuzzyAutomaton automaton;
};

/// Parses an automaton from JSON text. `origin` names the source (file name)
/// in diagnostics.
AutomatonFile parse_automaton(const std::string& text, const std::string& origin);
/// Reads and parses an automaton file.
AutomatonFile load_automaton(const std::string& path);

/// Parses a relation from JSON text; bare matrices are interpreted in
/// `lattice`, and the object form must declare the same lattice.
FuzzyRelation parse_relation(const std::string& text, const Lattice& lattice,
                             const std::string& origin);
/// Reads and parses a relation file.
FuzzyRelation load_relation(const std::string& path, const Lattice& lattice);

/// A relation together with the lattice its file declared.
struct RelationFile {
    Lattice lattice;
    FuzzyRelation relation;
};

/// Parses a self-describing relation file (object form only; a bare matrix
/// carries no lattice and is rejected).
RelationFile parse_standalone_relation(const std::string& text, const std::string& origin);
/// Reads and parses a self-describing relation file.
RelationFile load_standalone_relation(const std::string& path);

/// Serialization. Values are emitted canonically: rational strings for the
/// unit-interval lattices, integers for chain, true/false for Boolean.
nlohmann::ordered_json value_to_json(const Lattice& lattice, const Value& v);
nlohmann::ordered_json set_to_json(const Lattice& lattice, const FuzzySet& f);
nlohmann::ordered_json matrix_to_json(const Lattice& lattice, const FuzzyRelation& r);
nlohmann::ordered_json lattice_to_json(const Lattice& lattice);
nlohmann::ordered_json relation_to_json(const Lattice& lattice, const FuzzyRelation& r);
nlohmann::ordered_json automaton_to_json(const Lattice& lattice, const FuzzyAutomaton& a);

/// Renders a JSON document the way all tools here write files: two-space
/// indent and a trailing newline.
std::string render_json(const nlohmann::ordered_json& doc);

} // namespace fuzzaut

#endif // FUZZAUT_JSON_IO_HPP_
