#include "orad/body_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace orad {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Mat rows_to_matrix(const std::vector<std::vector<double>>& rows, std::size_t width, const char* what) {
  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw ParseError(std::string(what) + " row " + std::to_string(r + 1) + " has wrong length");
    for (std::size_t c = 0; c < width; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  return m;
}

Vec to_vec(const std::vector<double>& v) { return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size())); }

}  // namespace

double parse_number(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    throw ParseError("invalid number '" + std::string(token) + "'");
  return x;
}

std::vector<double> parse_number_list(std::string_view text, char sep) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(sep, start);
    const auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    out.push_back(parse_number(piece));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  for (double x : parse_number_list(text, sep)) {
    if (x != static_cast<int>(x)) throw ParseError("expected an integer list");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

BodyFile parse_body_file(std::string_view text) {
  BodyFile f;
  std::string section;
  std::vector<std::vector<double>> vrows, hrows;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      const std::string key(trim(line.substr(0, colon)));
      const std::string_view value = trim(line.substr(colon + 1));
      if (key == "dim") {
        const double d = parse_number(value);
        if (d < 1 || d != static_cast<int>(d)) throw ParseError("dim must be a positive integer");
        f.dim = static_cast<int>(d);
      } else if (key == "kind") {
        f.kind = std::string(value);
        if (f.kind != "vrep" && f.kind != "hrep" && f.kind != "named") throw ParseError("unknown kind '" + f.kind + "'");
      } else if (key == "vertices" || key == "halfspaces") {
        if (!value.empty()) throw ParseError("rows must start on the line after '" + key + ":'");
      } else if (key == "named") {
        f.named = std::string(value);
      } else {
        throw ParseError("unknown key '" + key + "' on line " + std::to_string(line_no));
      }
      section = key;
      continue;
    }
    if (section != "vertices" && section != "halfspaces") throw ParseError("unexpected data on line " + std::to_string(line_no));
    std::vector<double> row;
    for (auto tok : split_ws(line)) row.push_back(parse_number(tok));
    (section == "vertices" ? vrows : hrows).push_back(std::move(row));
  }
  if (f.dim == 0) throw ParseError("missing dim");
  if (f.kind.empty()) throw ParseError("missing kind");
  if (f.kind == "vrep") {
    if (vrows.empty()) throw ParseError("vrep body without vertices");
    f.vertices = rows_to_matrix(vrows, static_cast<std::size_t>(f.dim), "vertex");
  } else if (f.kind == "hrep") {
    if (hrows.empty()) throw ParseError("hrep body without halfspaces");
    f.halfspaces = rows_to_matrix(hrows, static_cast<std::size_t>(f.dim) + 1, "halfspace");
  } else if (f.named.empty()) {
    throw ParseError("named body without 'named:' line");
  }
  return f;
}

std::string format_body_file(const BodyFile& f) {
  std::ostringstream os;
  os << "dim: " << f.dim << "\nkind: " << f.kind << "\n";
  auto rows = [&](const char* key, const Mat& m) {
    os << key << ":\n";
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      os << " ";
      for (Eigen::Index c = 0; c < m.cols(); ++c) os << ' ' << format_double(m(r, c));
      os << "\n";
    }
  };
  if (f.kind == "vrep") rows("vertices", f.vertices);
  if (f.kind == "hrep") rows("halfspaces", f.halfspaces);
  if (f.kind == "named") os << "named: " << f.named << "\n";
  return os.str();
}

ConvexBody to_body(const BodyFile& f) {
  if (f.kind == "vrep") return ConvexBody::from_vertices(f.vertices.transpose());
  if (f.kind == "hrep") {
    std::vector<Halfspace> hs;
    for (Eigen::Index r = 0; r < f.halfspaces.rows(); ++r)
      hs.push_back({f.halfspaces.row(r).head(f.dim).transpose(), f.halfspaces(r, f.dim)});
    return ConvexBody::from_halfspaces(std::move(hs), f.dim);
  }
  const auto toks = split_ws(f.named);
  if (toks.empty()) throw ParseError("empty named constructor");
  const std::string name(toks[0]);
  std::map<std::string, std::string> args;
  for (std::size_t k = 1; k < toks.size(); ++k) {
    const auto eq = toks[k].find('=');
    if (eq == std::string_view::npos) throw ParseError("constructor argument '" + std::string(toks[k]) + "' is not key=value");
    args[std::string(toks[k].substr(0, eq))] = std::string(toks[k].substr(eq + 1));
  }
  auto need = [&](const std::string& key) -> const std::string& {
    const auto it = args.find(key);
    if (it == args.end()) throw ParseError(name + ": missing argument '" + key + "'");
    return it->second;
  };
  auto int_arg = [&](const std::string& key) {
    const auto v = parse_int_list(need(key));
    if (v.size() != 1) throw ParseError(name + ": '" + key + "' must be one integer");
    return v[0];
  };
  auto point = [&](const std::string& key) {
    const auto v = parse_number_list(need(key));
    if (static_cast<int>(v.size()) != f.dim) throw ParseError(name + ": '" + key + "' must have dim entries");
    return to_vec(v);
  };
  ConvexBody body = [&]() {
    if (name == "segment") return make_segment(point("a"), point("b"));
    if (name == "cube") return make_cube(parse_int_list(need("axes")), parse_number(need("half_width")), point("center"));
    if (name == "ball_in_subspace")
      return make_ball_in_subspace(Subspace::coordinate(f.dim, parse_int_list(need("axes"))), parse_number(need("radius")),
                                   int_arg("points"));
    if (name == "simplex_Kn") return make_simplex_Kn(int_arg("n"));
    if (name == "slab_body") {
      std::vector<int> cube;
      if (args.count("cube_axes") && !args["cube_axes"].empty()) cube = parse_int_list(args["cube_axes"]);
      return make_slab_body(f.dim, int_arg("segment_axis"), cube);
    }
    throw ParseError("unknown constructor '" + name + "'");
  }();
  if (body.dimension() != f.dim) throw ParseError(name + ": constructed body has dimension " + std::to_string(body.dimension()));
  return body;
}

BodyFile body_file_from(const ConvexBody& body) {
  if (!body.is_polytope()) throw DomainError("only polytopes can be written as body files");
  BodyFile f;
  f.dim = body.dimension();
  f.kind = "vrep";
  f.vertices = body.vertices().transpose();
  return f;
}

ConvexBody load_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open body file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return to_body(parse_body_file(ss.str()));
}

void save_body(const ConvexBody& body, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << format_body_file(body_file_from(body));
}

}  // namespace orad
