#include "garside/data_file.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace garside {

namespace {

Rational parse_rational(const std::string& tok) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(tok));
  return Rational(std::stoll(tok.substr(0, slash)),
                  std::stoll(tok.substr(slash + 1)));
}

// entry = comma-separated polynomial coefficients, constant term first
Cyc parse_entry(int m, const std::string& tok) {
  std::vector<Rational> cs;
  std::string cur;
  for (char ch : tok + ",") {
    if (ch == ',') {
      if (!cur.empty()) cs.push_back(parse_rational(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return Cyc::from_coeffs(m, std::move(cs));
}

}  // namespace

ReflData parse_refl_text(const std::string& text, const std::string& what) {
  ReflData d;
  std::istringstream in(text);
  std::string line;
  int pending_rows = 0;
  std::string pending_atom;
  std::vector<Cyc> pending_entries;
  auto fail = [&what](const std::string& msg) {
    throw std::runtime_error("reflection data '" + what + "': " + msg);
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (pending_rows > 0) {
      std::string tok;
      int got = 0;
      while (ls >> tok) {
        pending_entries.push_back(parse_entry(d.ring, tok));
        ++got;
      }
      if (got != d.dim) fail("matrix row with wrong entry count");
      if (--pending_rows == 0) {
        CycMatrix M;
        M.m = d.ring;
        M.n = d.dim;
        M.a = std::move(pending_entries);
        pending_entries.clear();
        d.atom_names.push_back(pending_atom);
        d.atoms.push_back(std::move(M));
      }
      continue;
    }
    std::string key;
    ls >> key;
    if (key == "name") {
      ls >> d.name;
    } else if (key == "ring") {
      ls >> d.ring;
    } else if (key == "dim") {
      ls >> d.dim;
    } else if (key == "rank") {
      ls >> d.rank;
    } else if (key == "apexlen") {
      ls >> d.apexlen;
    } else if (key == "order") {
      std::size_t o;
      ls >> o;
      d.order = o;
    } else if (key == "coxeter") {
      std::string tok;
      while (ls >> tok) d.coxeter_word.push_back(tok);
    } else if (key == "atom") {
      ls >> pending_atom;
      if (pending_atom.empty()) fail("atom without a name");
      pending_rows = d.dim;
      if (pending_rows <= 0) fail("atom before dim");
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (pending_rows != 0) fail("truncated matrix");
  if (d.atoms.empty()) fail("no atoms");
  if (d.coxeter_word.empty()) fail("no coxeter word");
  if (d.apexlen == 0) d.apexlen = d.rank;
  for (const auto& a : d.coxeter_word) {
    bool known = false;
    for (const auto& n : d.atom_names)
      if (n == a) known = true;
    if (!known) fail("coxeter word uses unknown atom '" + a + "'");
  }
  return d;
}

ReflData parse_refl_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open reflection data: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_refl_text(ss.str(), path);
}

std::string data_dir() {
  if (const char* env = std::getenv("GARSIDE_DATA_DIR")) return env;
#ifdef GARSIDE_DATA_DIR
  return GARSIDE_DATA_DIR;
#else
  return "data";
#endif
}

}  // namespace garside
