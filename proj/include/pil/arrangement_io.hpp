#pragma once

// Plain-text arrangement files:
//
//   # comment
//   dim 4
//   form 1 0 0 0
//   form 1/2 -3 0 7
//
// `dim` appears once, before any form; forms are labeled 0..n-1 in file order.

#include <stdexcept>
#include <string>
#include <string_view>

#include "pil/arrangement.hpp"

namespace pil {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Arrangement parse_arrangement(std::string_view text);
Arrangement load_arrangement(const std::string& path);
std::string format_arrangement(const Arrangement& a);

}  // namespace pil
