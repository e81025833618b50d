#include "natgt/scheme.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "natgt/rng.hpp"
#include "natgt/separating.hpp"
#include "natgt/text_format.hpp"

namespace natgt {
namespace {

void require_scheme_args(std::size_t n, std::size_t d, std::size_t u) {
  if (u < 2 || u > d || d >= n) throw std::invalid_argument("scheme: requires 2 <= u <= d < n");
}

BitVector pack(const std::vector<unsigned char>& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) v.set(i);
  return v;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

template <typename T>
T parse_number(const std::string& text, const std::string& key) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("scheme header: invalid value for '" + key + "': '" + text + "'");
  return value;
}

}  // namespace

std::string_view to_string(Mode mode) noexcept { return mode == Mode::deterministic ? "det" : "rand"; }

Mode parse_mode(std::string_view text) {
  if (text == "det") return Mode::deterministic;
  if (text == "rand") return Mode::randomized;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected det or rand)");
}

double separating_rows_real(const SchemeOptions& o) {
  require_scheme_args(o.n, o.d, o.u);
  if (o.u == o.d) return 1.0;
  return o.mode == Mode::deterministic ? rows_needed_deterministic_real(o.u, o.d - o.u, o.n)
                                       : rows_needed_randomized_real(o.u, o.d, o.epsilon);
}

std::size_t separating_rows(const SchemeOptions& o) {
  require_scheme_args(o.n, o.d, o.u);
  if (o.u == o.d) return 1;
  return o.mode == Mode::deterministic ? rows_needed_deterministic(o.u, o.d - o.u, o.n)
                                       : rows_needed_randomized(o.u, o.d, o.epsilon);
}

MeasurementScheme::MeasurementScheme(BitMatrix g, BitMatrix m, std::size_t u, std::size_t d, Mode mode,
                                     double epsilon, std::uint64_t seed, DisjunctConstruction construction)
    : g_(std::move(g)),
      m_(std::move(m)),
      m_bar_(complement(m_)),
      decoder_(m_),
      u_(u),
      d_(d),
      mode_(mode),
      epsilon_(epsilon),
      seed_(seed),
      construction_(construction) {
  if (g_.cols() != m_.cols()) throw std::invalid_argument("scheme: G and M must have the same column count");
  require_scheme_args(g_.cols(), d, u);
}

MeasurementScheme build_scheme(const SchemeOptions& o) {
  const std::size_t h = separating_rows(o);
  BitMatrix g = o.u == o.d ? BitMatrix::ones(1, o.n)
                           : gen_random(h, o.n, static_cast<double>(o.u) / static_cast<double>(o.d), o.seed);
  BitMatrix m = gen_disjunct(o.d, o.n, o.construction, stream_seed(o.seed, 1));
  return MeasurementScheme(std::move(g), std::move(m), o.u, o.d, o.mode, o.epsilon, o.seed, o.construction);
}

MeasurementScheme with_separating(const MeasurementScheme& s, BitMatrix g) {
  return MeasurementScheme(std::move(g), s.disjunct(), s.u(), s.d(), s.mode(), s.epsilon(), s.seed(),
                           s.construction());
}

BitMatrix stack_matrix(const MeasurementScheme& s) {
  const std::size_t k = s.k();
  BitMatrix t(s.tests(), s.n());
  for (std::size_t i = 0; i < s.h(); ++i) {
    const BitVector g_row = s.separating().row(i);
    const BitMatrix masked = mask_columns(s.disjunct(), g_row);
    const BitMatrix masked_bar = mask_columns(s.disjunct_complement(), g_row);
    const std::size_t base = i * s.block_size();
    t.set_row(base, g_row);
    for (std::size_t l = 0; l < k; ++l) {
      t.set_row(base + 1 + l, masked.row(l));
      t.set_row(base + 1 + k + l, masked_bar.row(l));
    }
  }
  return t;
}

BitVector threshold_encode(const BitMatrix& t, const BitVector& x, std::size_t u) {
  if (x.size() != t.cols()) throw std::invalid_argument("threshold_encode: x length must equal the column count");
  if (u < 1) throw std::invalid_argument("threshold_encode: u must be >= 1");
  std::vector<unsigned char> bits(t.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(t.rows()); ++r)
    bits[static_cast<std::size_t>(r)] = and_count(t.row_words(static_cast<std::size_t>(r)), x.words()) >= u;
  return pack(bits);
}

BitVector classical_encode(const BitMatrix& m, const BitVector& x) {
  if (x.size() != m.cols()) throw std::invalid_argument("classical_encode: x length must equal the column count");
  return union_columns(m, support(x));
}

BitVector convert_outcomes(const BitVector& y_block, const BitVector& ybar_block) {
  if (y_block.size() != ybar_block.size()) throw std::invalid_argument("convert_outcomes: block length mismatch");
  // y' = y OR NOT ybar: rule 1 sets y' whenever y is set; otherwise y' = NOT ybar.
  return y_block | ~ybar_block;
}

OutcomeView::OutcomeView(const BitVector& outcome, std::size_t h, std::size_t k) : outcome_(outcome), h_(h), k_(k) {
  if (outcome.size() != (2 * k + 1) * h)
    throw std::invalid_argument("outcome length " + std::to_string(outcome.size()) + " does not match (2k+1)h = " +
                                std::to_string((2 * k + 1) * h));
}

BitVector OutcomeView::slice(std::size_t offset) const {
  BitVector out(k_);
  for (std::size_t l = 0; l < k_; ++l)
    if (outcome_.test(offset + l)) out.set(l);
  return out;
}

IndexSet decode(const MeasurementScheme& s, const BitVector& outcome) {
  const OutcomeView view(outcome, s.h(), s.k());
  const CoverDecoder& decoder = s.cover_decoder();
  std::vector<IndexSet> accepted(s.h());

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(s.h()); ++si) {
    const auto i = static_cast<std::size_t>(si);
    if (!view.indicator(i)) continue;
    const BitVector y_prime = convert_outcomes(view.y_block(i), view.ybar_block(i));
    IndexSet candidates = decoder.decode(y_prime);
    if (candidates.size() != s.u()) continue;
    BitVector cover(s.k());
    for (std::size_t j : candidates) {
      const auto col = decoder.column_words(j - 1);
      auto acc = cover.words();
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= col[w];
    }
    if (cover == y_prime) accepted[i] = std::move(candidates);
  }

  IndexSet result;
  for (const auto& part : accepted) result.insert(result.end(), part.begin(), part.end());
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

BitVector simulate_instance(const MeasurementScheme& s, const IndexSet& items) {
  const BitVector x = indicator(s.n(), items);
  if (x.count() > s.d()) throw std::invalid_argument("simulate_instance: more than d defectives");
  const std::size_t k = s.k();
  const std::size_t u = s.u();
  const BitMatrix& m = s.disjunct();
  std::vector<unsigned char> bits(s.tests());

#pragma omp parallel for schedule(static)
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(s.h()); ++si) {
    const auto i = static_cast<std::size_t>(si);
    const std::size_t base = i * s.block_size();
    const BitVector hit = s.separating().row(i) & x;
    const std::size_t in_row = hit.count();
    bits[base] = in_row >= u;
    if (in_row < u) continue;  // both blocks are all-negative as well
    for (std::size_t l = 0; l < k; ++l) {
      const std::size_t in_test = and_count(m.row_words(l), hit.words());
      bits[base + 1 + l] = in_test >= u;
      bits[base + 1 + k + l] = in_row - in_test >= u;
    }
  }
  return pack(bits);
}

void write_scheme(std::ostream& out, const MeasurementScheme& s) {
  out << "# natgt measurement scheme\n"
      << "n=" << s.n() << '\n'
      << "d=" << s.d() << '\n'
      << "u=" << s.u() << '\n'
      << "mode=" << to_string(s.mode()) << '\n'
      << "epsilon=" << format_double(s.epsilon()) << '\n'
      << "seed=" << s.seed() << '\n'
      << "construction=" << to_string(s.construction()) << '\n'
      << "h=" << s.h() << '\n'
      << "k=" << s.k() << '\n'
      << "[G]\n";
  write_matrix(out, s.separating());
  out << "[M]\n";
  write_matrix(out, s.disjunct());
}

MeasurementScheme read_scheme(std::istream& in) {
  std::map<std::string, std::string> header;
  std::string line;
  bool found_g = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line == "[G]") {
      found_g = true;
      break;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("scheme header: expected key=value, got '" + line + "'");
    header[line.substr(0, eq)] = line.substr(eq + 1);
  }
  if (!found_g) throw ParseError("scheme: missing [G] section");
  BitMatrix g = read_matrix(in);
  do {
    if (!std::getline(in, line)) throw ParseError("scheme: missing [M] section");
    if (!line.empty() && line.back() == '\r') line.pop_back();
  } while (line.empty());
  if (line != "[M]") throw ParseError("scheme: expected [M], got '" + line + "'");
  BitMatrix m = read_matrix(in);

  const auto get = [&](const std::string& key) -> const std::string* {
    const auto it = header.find(key);
    return it == header.end() ? nullptr : &it->second;
  };
  const auto required = [&](const std::string& key) {
    const std::string* v = get(key);
    if (!v) throw ParseError("scheme header: missing '" + key + "'");
    return parse_number<std::size_t>(*v, key);
  };
  const std::size_t n = required("n");
  const std::size_t d = required("d");
  const std::size_t u = required("u");
  if (g.cols() != n || m.cols() != n) throw ParseError("scheme: matrix column counts do not match n");
  if (const auto* v = get("h"); v && parse_number<std::size_t>(*v, "h") != g.rows())
    throw ParseError("scheme: h does not match the G matrix");
  if (const auto* v = get("k"); v && parse_number<std::size_t>(*v, "k") != m.rows())
    throw ParseError("scheme: k does not match the M matrix");

  try {
    const Mode mode = get("mode") ? parse_mode(*get("mode")) : Mode::randomized;
    const double epsilon = get("epsilon") ? parse_number<double>(*get("epsilon"), "epsilon") : 0.0;
    const std::uint64_t seed = get("seed") ? parse_number<std::uint64_t>(*get("seed"), "seed") : 0;
    const DisjunctConstruction construction =
        get("construction") ? parse_construction(*get("construction")) : DisjunctConstruction::reed_solomon;
    return MeasurementScheme(std::move(g), std::move(m), u, d, mode, epsilon, seed, construction);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("scheme: ") + e.what());
  }
}

void save_scheme(const std::string& path, const MeasurementScheme& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_scheme(out, s);
}

MeasurementScheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_scheme(in);
}

}  // namespace natgt
