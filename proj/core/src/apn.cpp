#include "apnforge/apn.hpp"

#include <algorithm>

#include "apnforge/parallel.hpp"
#include "apnforge/phi.hpp"

namespace apnforge {

unsigned DiffSpectrum::uniformity() const noexcept {
  return histogram.empty() ? 0 : histogram.rbegin()->first;
}

namespace {

std::vector<std::uint32_t> value_table(const UniPoly& f) {
  std::vector<std::uint32_t> values(f.field().size());
  for (std::uint32_t x = 0; x < values.size(); ++x) values[x] = f.eval_bits(x);
  return values;
}

UniPoly lift(const UniPoly& f, const FieldPtr& field) {
  return same_field(f.field(), *field) ? f : f.embed(find_embedding(f.field_ptr(), field));
}

void check_spectrum_size(const Field& field) {
  if (field.size() > kMaxSpectrumFieldSize) {
    fail(ErrorCode::FieldTooLarge, field.spec() + " exceeds the 2^14-element spectrum limit");
  }
}

// g already has its coefficients in the evaluation field.
DiffSpectrum spectrum_in_place(const UniPoly& g, unsigned workers) {
  check_spectrum_size(g.field());
  const std::vector<std::uint32_t> values = value_table(g);
  const std::uint32_t q = g.field().size();

  const std::size_t chunks = chunk_count(q - 1, workers);
  std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(q + 1, 0));
  parallel_chunks(q - 1, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    std::vector<std::uint32_t> buckets(q);
    auto& hist = partial[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      const auto a = static_cast<std::uint32_t>(i + 1);
      std::fill(buckets.begin(), buckets.end(), 0);
      for (std::uint32_t x = 0; x < q; ++x) ++buckets[values[x ^ a] ^ values[x]];
      for (std::uint32_t b = 0; b < q; ++b) ++hist[buckets[b]];
    }
  });

  DiffSpectrum s;
  s.field_size = q;
  for (std::uint32_t count = 0; count <= q; ++count) {
    std::uint64_t total = 0;
    for (const auto& hist : partial) total += hist[count];
    if (total != 0) s.histogram[count] = total;
  }
  return s;
}

}  // namespace

DiffSpectrum spectrum(const UniPoly& f, const Embedding& embedding, unsigned workers) {
  check_spectrum_size(*embedding.target());
  return spectrum_in_place(f.embed(embedding), workers);
}

DiffSpectrum spectrum(const UniPoly& f, const FieldPtr& field, unsigned workers) {
  check_spectrum_size(*field);
  return spectrum_in_place(lift(f, field), workers);
}

bool is_apn(const UniPoly& f, const FieldPtr& field, unsigned workers) {
  return spectrum(f, field, workers).uniformity() <= 2;
}

FieldPtr extension_field(const Field& base, unsigned n) {
  const std::uint64_t degree = static_cast<std::uint64_t>(base.degree()) * n;
  if (n == 0 || degree > 14) {
    fail(ErrorCode::FieldTooLarge, "GF(2^" + std::to_string(degree) + ") exceeds the 2^14-element spectrum limit");
  }
  return make_field(static_cast<int>(degree));
}

ExtensionResult apn_over_extension(const UniPoly& f, unsigned n, unsigned workers) {
  const FieldPtr target = extension_field(f.field(), n);
  const unsigned u = spectrum(f, find_embedding(f.field_ptr(), target), workers).uniformity();
  return {n, u <= 2, u};
}

bool is_apn_over_extension(const UniPoly& f, unsigned n, unsigned workers) {
  return apn_over_extension(f, n, workers).apn;
}

ExponentClass classify_exponent(std::uint64_t t) {
  if (t == 0) fail(ErrorCode::InvalidArgument, "exponent must be positive");
  for (unsigned k = 1; k < 63; ++k) {
    if ((std::uint64_t{1} << k) + 1 == t) return {ExponentKind::Gold, k};
  }
  for (unsigned k = 2; k < 32; ++k) {
    if ((std::uint64_t{1} << (2 * k)) - (std::uint64_t{1} << k) + 1 == t) return {ExponentKind::Kasami, k};
  }
  return {};
}

SurfaceCheck surface_point_check(const UniPoly& f, const FieldPtr& field, unsigned workers) {
  if (field->size() > kMaxSurfaceFieldSize) {
    fail(ErrorCode::FieldTooLarge, field->spec() + " exceeds the 2^8-element surface limit");
  }
  const UniPoly g = lift(f, field);
  const TriPoly phi = build_phi(g).poly;
  const Field& F = *field;
  const std::uint32_t q = F.size();
  const int top = std::max(phi.total_degree(), 0);
  const auto D = static_cast<std::size_t>(top + 1);

  // powers[e * q + v] = v^e
  std::vector<std::uint32_t> powers(D * q);
  for (std::uint32_t v = 0; v < q; ++v) {
    std::uint32_t p = 1;
    for (std::size_t e = 0; e < D; ++e, p = F.mul(p, v)) powers[e * q + v] = p;
  }

  struct Partial {
    std::uint64_t zeros = 0;
    std::optional<Point3> first;
  };
  const std::size_t chunks = chunk_count(q, workers);
  std::vector<Partial> partial(chunks);
  parallel_chunks(q, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    std::vector<std::uint32_t> cx(D * D), cz(D);
    Partial& out = partial[chunk];
    for (auto x = static_cast<std::uint32_t>(begin); x < end; ++x) {
      std::fill(cx.begin(), cx.end(), 0);
      for (const auto& t : phi.terms()) {
        cx[t.mono.y * D + t.mono.z] ^= F.mul(t.coeff, powers[t.mono.x * q + x]);
      }
      for (std::uint32_t y = 0; y < q; ++y) {
        if (y == x) continue;
        std::fill(cz.begin(), cz.end(), 0);
        for (std::size_t j = 0; j < D; ++j) {
          const std::uint32_t yj = powers[j * q + y];
          for (std::size_t k = 0; j + k < D; ++k) cz[k] ^= F.mul(cx[j * D + k], yj);
        }
        for (std::uint32_t z = 0; z < q; ++z) {
          if (z == x || z == y) continue;
          std::uint32_t acc = 0;
          for (std::size_t k = D; k-- > 0;) acc = F.mul(acc, z) ^ cz[k];
          if (acc != 0) continue;
          ++out.zeros;
          if (!out.first) out.first = Point3{x, y, z};
        }
      }
    }
  });

  SurfaceCheck result;
  for (const auto& p : partial) {
    result.off_v_zeros += p.zeros;
    if (!result.witness && p.first) result.witness = p.first;
  }
  result.apn = is_apn(g, field, workers);
  result.consistent = (result.off_v_zeros == 0) == result.apn;
  if (result.witness) {
    const auto [x, y, z] = *result.witness;
    result.witness_a = x ^ y;
    result.witness_b = g.eval_bits(x) ^ g.eval_bits(y);
    for (std::uint32_t u = 0; u < q; ++u) {
      if ((g.eval_bits(u ^ result.witness_a) ^ g.eval_bits(u)) == result.witness_b) ++result.witness_solutions;
    }
  }
  return result;
}

}  // namespace apnforge
