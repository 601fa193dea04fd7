#include "crossint/family_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crossint {

namespace {

long long parse_int(const std::string& s, const char* what) {
  std::size_t pos = 0;
  long long v;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw PreconditionError(std::string("family text: bad ") + what + " '" + s + "'");
  }
  if (pos != s.size()) {
    throw PreconditionError(std::string("family text: bad ") + what + " '" + s + "'");
  }
  return v;
}

}  // namespace

std::string family_to_text(const SetFamily& family) {
  if (family.k() == 0 && !family.is_empty()) {
    throw PreconditionError("family text format requires k >= 1 for non-empty families");
  }
  std::ostringstream out;
  out << "n=" << family.universe() << " k=" << family.k() << "\n";
  for (const auto& elems : family.element_lists()) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (i) out << ",";
      out << elems[i];
    }
    out << "\n";
  }
  return out.str();
}

SetFamily family_from_stream(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) {
    throw PreconditionError("family text: missing header line");
  }
  long long n = -1, k = -1;
  {
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("n=", 0) == 0) {
        n = parse_int(tok.substr(2), "n");
      } else if (tok.rfind("k=", 0) == 0) {
        k = parse_int(tok.substr(2), "k");
      } else {
        throw PreconditionError("family text: unexpected header token '" + tok + "'");
      }
    }
  }
  if (n < 0 || k < 0) {
    throw PreconditionError("family text: header must be 'n=<int> k=<int>'");
  }
  std::vector<std::vector<int>> sets;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<int> elems;
    std::istringstream ls(line);
    std::string item;
    while (std::getline(ls, item, ',')) {
      elems.push_back(static_cast<int>(parse_int(item, "element")));
    }
    sets.push_back(std::move(elems));
  }
  return SetFamily::from_lists(static_cast<int>(n), static_cast<int>(k), sets);
}

SetFamily family_from_text(const std::string& text) {
  std::istringstream in(text);
  return family_from_stream(in);
}

SetFamily family_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  return family_from_stream(in);
}

void family_to_file(const SetFamily& family, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write family file: " + path);
  out << family_to_text(family);
}

}  // namespace crossint
