#pragma once

#include "shlie3/lie3.hpp"
#include "shlie3/simplicial.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace shlie3::cli {

// Parse errors carry a location: a byte offset for JSON syntax errors or a
// JSON pointer for semantic ones.
class SpecError : public std::invalid_argument {
 public:
  SpecError(const std::string& where, const std::string& what)
      : std::invalid_argument(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

enum class Kind { linfinity, lie3, chain, simplicial };
std::string to_string(Kind k);

// kinds linfinity / lie3 / chain carry multilinear maps, simplicial carries
// face and degeneracy matrices named d<n>_<i> and s<n>_<i>
struct AlgebraSpecFile {
  Kind kind = Kind::linfinity;
  std::vector<std::size_t> dims;
  std::map<std::string, MultiMap> maps;
  std::map<std::string, Matrix> matrices;
  std::optional<std::string> name, description;
};

AlgebraSpecFile parse_spec(const std::string& text);
// canonical form: sorted keys, canonical argument order, zero entries dropped
std::string render_spec(const AlgebraSpecFile& spec);

LInfinityData to_linfinity_data(const AlgebraSpecFile& spec);
Lie3Data to_lie3_data(const AlgebraSpecFile& spec);
LinearNCat to_category(const AlgebraSpecFile& spec);
SimplicialVS to_simplicial(const AlgebraSpecFile& spec);

AlgebraSpecFile spec_of(const LInfinityData& A);
AlgebraSpecFile spec_of(const Lie3Data& D);
AlgebraSpecFile spec_of(const LinearNCat& L);
AlgebraSpecFile spec_of(const SimplicialVS& S);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<Violation> violations;
  std::string note;
  std::optional<double> seconds;
};

struct RunReport {
  std::string command;
  std::string kind;
  std::vector<CheckResult> checks;
  nlohmann::json details = nlohmann::json::object();
  std::optional<std::string> emitted;  // spec text produced by convert / nerve
  bool passed() const;
};

struct Flags {
  std::optional<int> n;         // restrict `check` to one condition
  std::string format = "text";  // text | json
  int trunc = 4;
  std::string to;               // convert target
  bool timing = false;
  std::size_t max_violations = 20;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& commands();
// throws UsageError for kind/command mismatches and bad flags
RunReport run(const std::string& command, const AlgebraSpecFile& spec, const Flags& flags);

std::string render_text(const RunReport& r, const Flags& flags);
std::string render_json(const RunReport& r, const Flags& flags);

}  // namespace shlie3::cli
