// Copyright 2026 The attdisc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "attdisc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace attdisc {

namespace {

struct Token {
  std::string text;
  int line = 0;
};

// Tokenize on whitespace, dropping `#` comments. Line numbers are kept for
// diagnostics.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  std::string cur;
  int cur_line = 0;
  bool in_comment = false;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back({cur, cur_line});
      cur.clear();
    }
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      in_comment = false;
      ++line;
      continue;
    }
    if (in_comment) continue;
    if (c == '#') {
      flush();
      in_comment = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      continue;
    }
    if (cur.empty()) cur_line = line;
    cur += c;
  }
  flush();
  return tokens;
}

int parse_count(const std::vector<Token>& tokens, std::size_t& pos, const std::string& what) {
  if (pos >= tokens.size()) {
    throw ParseError("unexpected end of input, expected " + what);
  }
  const Token& tok = tokens[pos++];
  try {
    std::size_t used = 0;
    int value = std::stoi(tok.text, &used);
    if (used != tok.text.size() || value < 0) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(tok.line) + ": expected " + what +
                     ", got '" + tok.text + "'");
  }
}

}  // namespace

Instance parse_instance(std::string_view text, int noise_bound, int lcm_cap) {
  const std::vector<Token> tokens = tokenize(text);
  std::size_t pos = 0;

  const int m = parse_count(tokens, pos, "attractor count m");
  const int n = parse_count(tokens, pos, "node count n");
  if (m < 2) {
    throw ParseError("m < 2: an instance needs at least two attractors");
  }
  if (n < 1) {
    throw ParseError("node count n must be positive");
  }

  std::vector<Attractor> attractors;
  attractors.reserve(m);
  for (int a = 1; a <= m; ++a) {
    const int p = parse_count(tokens, pos, "period of attractor " + std::to_string(a));
    if (p < 1) {
      throw ParseError("attractor " + std::to_string(a) + ": period must be >= 1");
    }
    std::vector<std::vector<uint8_t>> states;
    states.reserve(p);
    for (int t = 0; t < p; ++t) {
      // a state row is n bits, possibly split across several tokens
      std::vector<uint8_t> row;
      row.reserve(n);
      int row_line = 0;
      while (static_cast<int>(row.size()) < n) {
        if (pos >= tokens.size()) {
          throw ParseError("attractor " + std::to_string(a) + ", state " +
                           std::to_string(t + 1) + ": unexpected end of input");
        }
        const Token& tok = tokens[pos++];
        row_line = tok.line;
        for (char c : tok.text) {
          if (c != '0' && c != '1') {
            throw ParseError("line " + std::to_string(tok.line) + ": non-binary symbol '" +
                             std::string(1, c) + "' in state row of attractor " +
                             std::to_string(a));
          }
          row.push_back(c == '1');
        }
      }
      if (static_cast<int>(row.size()) != n) {
        throw ParseError("line " + std::to_string(row_line) + ": state row of attractor " +
                         std::to_string(a) + " has " + std::to_string(row.size()) +
                         " bits, expected " + std::to_string(n));
      }
      states.push_back(std::move(row));
    }
    try {
      attractors.emplace_back(a, std::move(states));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  if (pos != tokens.size()) {
    throw ParseError("line " + std::to_string(tokens[pos].line) +
                     ": trailing content after the last attractor");
  }
  return Instance(std::move(attractors), noise_bound, lcm_cap);
}

Instance load_instance(const std::filesystem::path& path, int noise_bound, int lcm_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open instance file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), noise_bound, lcm_cap);
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << instance.attractor_count() << ' ' << instance.node_count() << '\n';
  for (const Attractor& a : instance.attractors()) {
    out << a.period() << '\n';
    for (const auto& row : a.states()) {
      for (uint8_t bit : row) out << static_cast<char>('0' + bit);
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace attdisc
