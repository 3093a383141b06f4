#include "mcdc/vectors.hpp"

#include <sstream>

#include "mcdc/errors.hpp"

namespace mcdc {

std::vector<InputVector> parse_vectors(const std::string& text, int n) {
  std::vector<InputVector> out;
  std::istringstream stream(text);
  std::string line;
  int line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    InputVector v;
    std::string token;
    auto flush_token = [&] {
      if (token.empty()) return;
      if (token == "0")
        v.push_back(false);
      else if (token == "1")
        v.push_back(true);
      else
        throw BadToken(line_number, token);
      token.clear();
    };
    for (char c : line) {
      if (c == ' ' || c == '\t' || c == ',' || c == '\r')
        flush_token();
      else
        token += c;
    }
    flush_token();
    if (v.empty()) continue;  // blank or comment-only line
    if (static_cast<int>(v.size()) != n)
      throw WrongArity(line_number, n, static_cast<int>(v.size()));
    out.push_back(std::move(v));
  }
  return out;
}

std::string format_vectors(const std::vector<InputVector>& vectors) {
  std::string out;
  for (const InputVector& v : vectors) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ' ';
      out += v[i] ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

} // namespace mcdc
