#include "pil/arrangement_io.hpp"
#include "pil/coverage.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace pil {

Arrangement parse_arrangement(std::string_view text) {
  coverage::hit(coverage::Op::ParseArrangement);
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::size_t dim = 0;
  bool have_dim = false;
  std::vector<Vector> forms;

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string keyword;
    if (!(line >> keyword)) continue;

    std::vector<std::string> args;
    for (std::string tok; line >> tok;) args.push_back(tok);

    if (keyword == "dim") {
      if (have_dim) throw ParseError(lineno, "duplicate 'dim' declaration");
      if (args.size() != 1) throw ParseError(lineno, "'dim' takes exactly one argument");
      try {
        std::size_t used = 0;
        const long v = std::stol(args[0], &used);
        if (used != args[0].size() || v < 1) throw std::invalid_argument("bad dim");
        dim = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw ParseError(lineno, "dimension must be a positive integer, got '" + args[0] + "'");
      }
      have_dim = true;
    } else if (keyword == "form") {
      if (!have_dim) throw ParseError(lineno, "'form' before 'dim'");
      if (args.size() != dim) {
        throw ParseError(lineno, "dimension mismatch: expected " + std::to_string(dim) + " coefficients, got " +
                                     std::to_string(args.size()));
      }
      Vector form;
      for (const auto& tok : args) {
        try {
          form.push_back(parse_rational(tok));
        } catch (const std::invalid_argument& e) {
          throw ParseError(lineno, e.what());
        }
      }
      if (is_zero(form)) throw ParseError(lineno, "zero form");
      forms.push_back(std::move(form));
    } else {
      throw ParseError(lineno, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_dim) throw ParseError(lineno, "missing 'dim' declaration");
  return Arrangement(dim, std::move(forms));
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement(buf.str());
}

std::string format_arrangement(const Arrangement& a) {
  std::ostringstream os;
  os << "dim " << a.ambient_dim() << '\n';
  for (const auto& l : a.forms()) {
    os << "form";
    for (const auto& c : l) os << ' ' << c.get_str();
    os << '\n';
  }
  return os.str();
}

}  // namespace pil
