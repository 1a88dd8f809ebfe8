#ifndef SIGMAGB_PROBLEM_HPP
#define SIGMAGB_PROBLEM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigmagb/diff_poly.hpp"

namespace sigmagb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ProblemFile {
  int rank = 1;
  std::vector<std::string> unknowns;
  std::vector<std::string> params;
  SigmaOrdering ordering;
  std::optional<Truncation> bound;
  // Sorted under ring().
  std::vector<DiffPolynomial> generators;

  Ring ring() const { return Ring(rank, unknowns, params, ordering); }
  // Re-sorts the generators for a different ordering.
  ProblemFile with_ordering(const SigmaOrdering& o) const;

  friend bool operator==(const ProblemFile& a, const ProblemFile& b);
};

// Line-oriented format, '#' starts a comment:
//   ring r=<int> vars <name>,... [params <name>,...]
//   order ranking=(weight|index) sigma=(degrevlex|lex) inner=(lex|degrevlex)
//   bound ord=<int> | bound weight=<int>,...
//   gen <expression>;
// Variables are written name[i1,...,ir]; expressions use integers,
// parameter names, + - * ^, parentheses and division by scalars.
ProblemFile parse_problem(std::string_view text);
ProblemFile load_problem(const std::string& path);
std::string serialize_problem(const ProblemFile& p);

// Parses one polynomial expression over an existing ring.
DiffPolynomial parse_polynomial(const Ring& ring, std::string_view text);

Ranking parse_ranking(const std::string& s);
SigmaOrderKind parse_sigma_order(const std::string& s);
InnerOrder parse_inner_order(const std::string& s);

}  // namespace sigmagb

#endif
