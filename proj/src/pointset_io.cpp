#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dynhull/geometry.hpp"

namespace dynhull {

namespace {

struct RawSet {
  long long n = 0;
  int d = 0;
  std::vector<std::string> tokens;  // n*d coordinate tokens
  bool rational = false;
};

RawSet read_tokens(std::istream& in) {
  RawSet raw;
  if (!(in >> raw.n >> raw.d)) throw ParseError("missing point count / dimension header");
  if (raw.n < 0 || raw.d < 1) throw ParseError("bad header: need n >= 0, d >= 1");
  raw.tokens.reserve(static_cast<std::size_t>(raw.n) * raw.d);
  std::string tok;
  for (long long i = 0; i < raw.n * raw.d; ++i) {
    if (!(in >> tok)) throw ParseError("fewer coordinates than the header promises");
    if (tok.find('/') != std::string::npos) raw.rational = true;
    raw.tokens.push_back(tok);
  }
  if (in >> tok) throw ParseError("trailing data after the last point");
  return raw;
}

template <class S>
PointSet<S> build(const RawSet& raw) {
  PointSet<S> ps(raw.d);
  std::size_t k = 0;
  for (long long i = 0; i < raw.n; ++i) {
    std::vector<S> p;
    p.reserve(static_cast<std::size_t>(raw.d));
    for (int j = 0; j < raw.d; ++j) p.emplace_back(S(raw.tokens[k++]));
    ps.pts.push_back(std::move(p));
  }
  return ps;
}

}  // namespace

AnyPointSet read_pointset(std::istream& in) {
  RawSet raw = read_tokens(in);
  if (raw.rational) return build<ExactRat>(raw);
  return build<ExactInt>(raw);
}

template <class S>
PointSet<S> read_pointset_as(std::istream& in) {
  return build<S>(read_tokens(in));
}

template PointSet<ExactInt> read_pointset_as<ExactInt>(std::istream&);
template PointSet<ExactRat> read_pointset_as<ExactRat>(std::istream&);

template <class S>
void write_pointset(std::ostream& out, const PointSet<S>& ps) {
  out << ps.size() << ' ' << ps.dim << '\n';
  for (const auto& p : ps.pts) {
    for (int j = 0; j < ps.dim; ++j) {
      if (j) out << ' ';
      out << p[j].str();
    }
    out << '\n';
  }
}

template void write_pointset<ExactInt>(std::ostream&, const PointSet<ExactInt>&);
template void write_pointset<ExactRat>(std::ostream&, const PointSet<ExactRat>&);

}  // namespace dynhull
