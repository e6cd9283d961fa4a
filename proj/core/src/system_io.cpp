#include "coxlat/system_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <sys/stat.h>

#include "coxlat/errors.hpp"

namespace coxlat {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw input_error("bad " + what + ": '" + tok + "'");
  }
}

Rational parse_rational(const std::string& tok) {
  try {
    Rational q(tok);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw input_error("bad rational: '" + tok + "'");
  }
}

}  // namespace

SystemPtr parse_system_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int rank = -1;
  std::map<std::pair<int, int>, int> labels;
  std::map<std::pair<int, int>, Rational> bonds;

  auto edge = [&](std::istringstream& ls, const char* kind) {
    std::string si, sj, eq;
    ls >> si >> sj >> eq;
    if (eq != "=") throw input_error(std::string(kind) + " line needs '='");
    int i = parse_int(si, "generator index");
    int j = parse_int(sj, "generator index");
    if (i < 1 || j < 1 || i > rank || j > rank || i >= j) {
      throw input_error("need 1 <= i < j <= rank, got " + si + " " + sj);
    }
    return std::make_pair(i - 1, j - 1);
  };

  while (std::getline(in, line)) {
    line = trimmed(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "rank") {
      if (rank >= 0) throw input_error("rank given twice");
      std::string tok;
      ls >> tok;
      rank = parse_int(tok, "rank");
      if (rank < 1) throw input_error("rank must be >= 1");
    } else if (head == "m") {
      if (rank < 0) throw input_error("rank must come first");
      auto ij = edge(ls, "m");
      std::string val;
      ls >> val;
      if (val == "inf") {
        labels[ij] = CoxeterSystem::kInfinite;
      } else {
        labels[ij] = parse_int(val, "label");
      }
    } else if (head == "bond") {
      if (rank < 0) throw input_error("rank must come first");
      auto ij = edge(ls, "bond");
      std::string val;
      ls >> val;
      Rational q = parse_rational(val);
      if (q > Rational(-1)) {
        throw input_error("bond must be at most -1, got " + val);
      }
      bonds[ij] = q;
    } else {
      throw input_error("unrecognized directive '" + head + "'");
    }
  }
  if (rank < 0) throw input_error("missing 'rank N' line");
  for (const auto& [ij, q] : bonds) {
    auto it = labels.find(ij);
    if (it == labels.end() || it->second != CoxeterSystem::kInfinite) {
      throw input_error("bond given for a pair without an inf label");
    }
    (void)q;
  }
  return CoxeterSystem::make(rank, labels, bonds);
}

SystemPtr parse_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read system file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system_text(buf.str());
}

SystemPtr named_system(const std::string& name) {
  auto tail_int = [&](std::size_t at) {
    return parse_int(name.substr(at), "rank in system name");
  };
  if (name == "Ainf") return CoxeterSystem::dihedral_infinite();
  if (name == "G2") return CoxeterSystem::dihedral(6);
  if (name == "H2") return CoxeterSystem::dihedral(5);
  if (name.size() >= 2 && name[0] == 'A' && std::isdigit(name[1]))
    return CoxeterSystem::type_a(tail_int(1));
  if (name.size() >= 2 && name[0] == 'B' && std::isdigit(name[1]))
    return CoxeterSystem::type_b(tail_int(1));
  if (name.size() >= 2 && name[0] == 'I' && std::isdigit(name[1]))
    return CoxeterSystem::dihedral(tail_int(1));
  throw input_error("unknown system '" + name +
                    "' (expected a file or A<n>, B<n>, G2, H2, I<m>, Ainf)");
}

SystemPtr load_system(const std::string& where) {
  struct stat st;
  if (stat(where.c_str(), &st) == 0) return parse_system_file(where);
  return named_system(where);
}

GroupElement parse_element(SystemPtr sys, const std::string& text) {
  if (text == "e") return GroupElement::identity(sys);
  std::vector<int> word;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, '.')) {
    int s = parse_int(tok, "generator");
    if (s < 1 || s > sys->rank()) {
      throw input_error("generator " + tok + " out of range 1.." +
                        std::to_string(sys->rank()));
    }
    word.push_back(s - 1);
  }
  if (word.empty()) throw input_error("empty word literal");
  return GroupElement::from_word(sys, word);
}

int parse_root(const RootTable& t, const std::string& text) {
  std::string s = trimmed(text);
  bool neg = false;
  if (!s.empty() && s[0] == '-') {
    neg = true;
    s = s.substr(1);
  }
  if (s.empty() || s[0] != '#') {
    throw input_error("root literal must look like #k or -#k, got '" + text +
                      "'");
  }
  int k = parse_int(s.substr(1), "root position");
  if (k < 1 || k > t.size()) {
    throw input_error("root position " + std::to_string(k) +
                      " out of range 1.." + std::to_string(t.size()));
  }
  int r = k - 1;
  return neg ? RootTable::negate(r) : r;
}

RootSet parse_root_set(const RootTable& t, const std::string& text) {
  std::string s = trimmed(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw input_error("set literal must be brace-enclosed, got '" + text +
                      "'");
  }
  RootSet out(t);
  std::string body = s.substr(1, s.size() - 2);
  if (trimmed(body).empty()) return out;
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) out.insert(parse_root(t, tok));
  return out;
}

}  // namespace coxlat
