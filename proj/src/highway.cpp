#include <algorithm>
#include <unordered_map>

#include "emergelab/ant.hpp"
#include "emergelab/error.hpp"

namespace emergelab::ant {

namespace {

constexpr std::int64_t kWordBits = 64;

// Growable bitmap of the plane used by the detector; the sparse BlackSet is
// too slow for per-step window extraction.
class DenseField {
 public:
  DenseField(std::int64_t min_x, std::int64_t min_y, std::int64_t max_x, std::int64_t max_y) {
    allocate(min_x, min_y, max_x, max_y);
  }

  // Grows (with slack) until [x0, x1] x [y0, y1] lies inside, plus one spare
  // word on the right so window extraction can always read word + 1.
  void ensure(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
    if (x0 >= min_x_ && y0 >= min_y_ && x1 + kWordBits < min_x_ + width() && y1 < min_y_ + height_) {
      return;
    }
    const std::int64_t nx0 = std::min(x0, min_x_) - width() / 2;
    const std::int64_t ny0 = std::min(y0, min_y_) - height_ / 2;
    const std::int64_t nx1 = std::max(x1, min_x_ + width() - 1) + width() / 2;
    const std::int64_t ny1 = std::max(y1, min_y_ + height_ - 1) + height_ / 2;
    DenseField bigger(nx0, ny0, nx1, ny1);
    for (std::int64_t y = 0; y < height_; ++y) {
      for (std::int64_t x = 0; x < width(); ++x) {
        if (get_local(x, y)) bigger.flip(min_x_ + x, min_y_ + y);
      }
    }
    *this = std::move(bigger);
  }

  bool get(std::int64_t x, std::int64_t y) const { return get_local(x - min_x_, y - min_y_); }

  void flip(std::int64_t x, std::int64_t y) {
    const std::int64_t lx = x - min_x_;
    bits_[static_cast<std::size_t>((y - min_y_) * words_ + lx / kWordBits)] ^=
        std::uint64_t{1} << (lx % kWordBits);
  }

  // Appends rows y - r .. y + r, each holding columns x - r .. x + r packed
  // LSB-first into ceil((2r + 1) / 64) words.
  void window(std::int64_t x, std::int64_t y, std::int64_t r, std::vector<std::uint64_t>& out) const {
    const std::int64_t w = 2 * r + 1;
    const std::int64_t out_words = (w + kWordBits - 1) / kWordBits;
    for (std::int64_t yy = y - r; yy <= y + r; ++yy) {
      const std::uint64_t* row = &bits_[static_cast<std::size_t>((yy - min_y_) * words_)];
      for (std::int64_t o = 0; o < out_words; ++o) {
        const std::int64_t start = x - r - min_x_ + o * kWordBits;
        const std::int64_t wi = start / kWordBits;
        const unsigned shift = static_cast<unsigned>(start % kWordBits);
        std::uint64_t v = row[wi] >> shift;
        if (shift != 0) v |= row[wi + 1] << (kWordBits - shift);
        const std::int64_t nbits = std::min<std::int64_t>(kWordBits, w - o * kWordBits);
        if (nbits < kWordBits) v &= (std::uint64_t{1} << nbits) - 1;
        out.push_back(v);
      }
    }
  }

 private:
  void allocate(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
    min_x_ = x0;
    min_y_ = y0;
    words_ = (x1 - x0 + 1 + kWordBits - 1) / kWordBits + 1;
    height_ = y1 - y0 + 1;
    bits_.assign(static_cast<std::size_t>(words_ * height_), 0);
  }

  std::int64_t width() const { return words_ * kWordBits; }

  bool get_local(std::int64_t lx, std::int64_t ly) const {
    return ((bits_[static_cast<std::size_t>(ly * words_ + lx / kWordBits)] >> (lx % kWordBits)) & 1) != 0;
  }

  std::int64_t min_x_ = 0, min_y_ = 0, words_ = 0, height_ = 0;
  std::vector<std::uint64_t> bits_;
};

std::uint64_t hash_words(const std::uint64_t* w, std::size_t n) {
  std::uint64_t h = mix64(n);
  for (std::size_t i = 0; i < n; ++i) h = mix64(h ^ w[i]);
  return h;
}

}  // namespace

HighwayReport detect_highway(const AntState& start, std::uint64_t max_steps,
                             std::int64_t window_radius, std::uint64_t confirmations) {
  if (max_steps < 1 || window_radius < 1 || confirmations < 1) {
    throw Error("detect_highway: max_steps, window_radius and confirmations must all be at least 1");
  }
  HighwayReport report;
  report.window_radius = window_radius;
  report.confirmations = confirmations;
  report.steps_simulated = max_steps;

  const std::int64_t r = window_radius;
  const std::int64_t margin = r + 2 * kWordBits;
  std::int64_t x0 = start.pos.x, y0 = start.pos.y, x1 = start.pos.x, y1 = start.pos.y;
  for (const Cell& c : start.black) {
    x0 = std::min(x0, c.x);
    y0 = std::min(y0, c.y);
    x1 = std::max(x1, c.x);
    y1 = std::max(y1, c.y);
  }
  DenseField field(x0 - margin, y0 - margin, x1 + margin, y1 + margin);
  for (const Cell& c : start.black) field.flip(c.x, c.y);

  // Fingerprint layout: heading word followed by the window rows.
  const std::size_t fp_words =
      1 + static_cast<std::size_t>((2 * r + 1) * ((2 * r + 1 + kWordBits - 1) / kWordBits));
  std::vector<std::uint64_t> prints;
  prints.reserve(fp_words * (max_steps + 1));
  std::vector<Cell> positions;
  positions.reserve(max_steps + 1);

  Cell pos = start.pos;
  Heading heading = start.heading;
  for (std::uint64_t t = 0;; ++t) {
    field.ensure(pos.x - r, pos.y - r, pos.x + r, pos.y + r);
    prints.push_back(static_cast<std::uint64_t>(heading));
    field.window(pos.x, pos.y, r, prints);
    positions.push_back(pos);
    if (t == max_steps) break;
    const bool black = field.get(pos.x, pos.y);
    heading = black ? turn_right(heading) : turn_left(heading);
    field.flip(pos.x, pos.y);
    const Cell d = delta(heading);
    pos = {pos.x + d.x, pos.y + d.y};
  }

  auto fp = [&](std::uint64_t t) { return prints.data() + t * fp_words; };
  auto same = [&](std::uint64_t a, std::uint64_t b) {
    return std::equal(fp(a), fp(a) + fp_words, fp(b));
  };

  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> by_hash;
  by_hash.reserve(max_steps + 1);
  std::vector<std::uint64_t> hashes(max_steps + 1);
  for (std::uint64_t t = 0; t <= max_steps; ++t) {
    hashes[t] = hash_words(fp(t), fp_words);
    by_hash[hashes[t]].push_back(t);
  }

  for (std::uint64_t t1 = 0; t1 <= max_steps; ++t1) {
    const auto& bucket = by_hash[hashes[t1]];
    for (auto it = std::upper_bound(bucket.begin(), bucket.end(), t1); it != bucket.end(); ++it) {
      const std::uint64_t p = *it - t1;
      if (t1 + (confirmations + 1) * p > max_steps) break;
      if (!same(t1, *it)) continue;
      const std::int64_t dx = positions[*it].x - positions[t1].x;
      const std::int64_t dy = positions[*it].y - positions[t1].y;
      if (dx == 0 && dy == 0) continue;
      bool ok = true;
      for (std::uint64_t k = 2; ok && k <= confirmations + 1; ++k) {
        const std::uint64_t tk = t1 + k * p;
        const auto kk = static_cast<std::int64_t>(k);
        ok = same(t1, tk) && positions[tk].x - positions[t1].x == kk * dx &&
             positions[tk].y - positions[t1].y == kk * dy;
      }
      if (ok) {
        report.found = true;
        report.onset = t1;
        report.period = p;
        report.dx = dx;
        report.dy = dy;
        return report;
      }
    }
  }
  return report;
}

namespace {

std::vector<Cell> sparse_window(const AntState& s, std::int64_t r) {
  std::vector<Cell> cells;
  for (std::int64_t dy = -r; dy <= r; ++dy) {
    for (std::int64_t dx = -r; dx <= r; ++dx) {
      if (s.black.contains({s.pos.x + dx, s.pos.y + dy})) cells.push_back({dx, dy});
    }
  }
  return cells;
}

}  // namespace

bool replay_highway(const AntState& start, const HighwayReport& report, std::uint64_t periods) {
  if (!report.found || report.period == 0) return false;
  AntState s = run(start, report.onset);
  const Cell base = s.pos;
  const Heading heading = s.heading;
  const std::vector<Cell> window = sparse_window(s, report.window_radius);
  for (std::uint64_t k = 1; k <= periods; ++k) {
    for (std::uint64_t i = 0; i < report.period; ++i) advance(s);
    const auto kk = static_cast<std::int64_t>(k);
    if (s.pos.x - base.x != kk * report.dx || s.pos.y - base.y != kk * report.dy) return false;
    if (s.heading != heading || sparse_window(s, report.window_radius) != window) return false;
  }
  return true;
}

}  // namespace emergelab::ant
