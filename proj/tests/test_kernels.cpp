#include <random>
#include <vector>

#include "doctest.h"
#include "swscan/error.hpp"
#include "swscan/kernels.hpp"
#include "swscan/oracle.hpp"
#include "swscan/sse2_backend.hpp"
#include "test_support.hpp"

using namespace swscan;
using swscan::testing::dna;
using swscan::testing::random_vector;
using swscan::testing::uniform;

namespace {

const ScoringScheme kScheme = ScoringScheme::match_mismatch(Alphabet::dna(), 2, -1, 3, 1);

using Correction = std::vector<ScoreVector> (*)(const ScoreVector&, std::vector<ScoreVector>, Score,
                                                VectorSpec);

const Correction kCorrections[] = {
    static_cast<Correction>(&correct_separated),
    static_cast<Correction>(&correct_inverted),
    static_cast<Correction>(&correct_scan),
};

std::vector<ScoreVector> full(const ScoreVector& f, std::vector<ScoreVector> h, Score ext, VectorSpec spec) {
  correct_lazyf_full(f, h, ext, spec);
  return h;
}

}  // namespace

TEST_CASE("correction routines on hand cases") {
  const VectorSpec spec(4);
  for (Correction fn : kCorrections) {
    const std::vector<ScoreVector> zero{{0, 0, 0, 0}, {0, 0, 0, 0}};
    CHECK(fn({10, 0, 0, 0}, zero, 1, spec) ==
          std::vector<ScoreVector>{{0, 10, 8, 6}, {0, 9, 7, 5}});
    const std::vector<ScoreVector> some{{1, 2, 3, 4}, {5, 0, 7, 0}};
    CHECK(fn({0, 0, 0, 0}, some, 1, spec) == some);
    const std::vector<ScoreVector> high{{50, 50, 50, 50}, {50, 50, 50, 50}};
    CHECK(fn({10, 20, 30, 40}, high, 1, spec) == high);
  }
}

TEST_CASE("transformation chain matches the full lazy-F loop") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 1500; ++iter) {
    const std::size_t p = std::size_t{1} << uniform(rng, 1, 6);
    const VectorSpec spec(p);
    const std::size_t seg = static_cast<std::size_t>(uniform(rng, 1, 64));
    const auto ext = static_cast<Score>(uniform(rng, 1, uniform(rng, 0, 1) ? 8 : 2000));
    const int hi = uniform(rng, 0, 1) ? 1000 : kScoreMax;
    const ScoreVector f = random_vector(rng, p, hi);
    std::vector<ScoreVector> h;
    for (std::size_t j = 0; j < seg; ++j) h.push_back(random_vector(rng, p, hi));
    const auto expect = full(f, h, ext, spec);
    for (Correction fn : kCorrections) CHECK(fn(f, h, ext, spec) == expect);
  }
}

TEST_CASE("weighted_max_scan hand cases") {
  const VectorSpec spec(4);
  CHECK(weighted_max_scan({10, 0, 0, 0}, 2, spec) == ScoreVector{0, 10, 8, 6});
  CHECK(weighted_max_scan({5, 9, 1, 7}, 3, spec) == ScoreVector{0, 5, 9, 6});
  CHECK(weighted_max_scan({1, 2, 3, 4}, 0, spec) == ScoreVector{0, 1, 2, 3});
}

TEST_CASE("weighted_max_scan matches the sequential scan with log2(p) steps") {
  std::mt19937_64 rng(4242);
  for (std::size_t p : {2, 4, 8, 16, 32, 64}) {
    const VectorSpec spec(p);
    for (int iter = 0; iter < 500; ++iter) {
      const ScoreVector f = random_vector(rng, p, uniform(rng, 0, 1) ? 300 : kScoreMax);
      const std::uint64_t d = static_cast<std::uint64_t>(uniform(rng, 0, uniform(rng, 0, 1) ? 40 : 70000));
      ReferenceBackend be(spec);
      CHECK(weighted_max_scan(be, f, d) == scan_sequential(f, d, spec));
      CHECK(be.counters().shifts == spec.log2_lanes() + 1);
      CHECK(be.counters().maxes == spec.log2_lanes());
      CHECK(be.counters().sat_subs == spec.log2_lanes());
    }
  }
}

TEST_CASE("kernels on hand cases") {
  for (std::size_t p : {2, 4, 8}) {
    const QueryProfile aaa(dna("AAA"), kScheme, VectorSpec(p));
    CHECK(align_lazyf(aaa, dna("AA"), kScheme, true).score == 4);
    CHECK(align_lazyf(aaa, dna("AA"), kScheme, false).score == 4);
    CHECK(align_scan(aaa, dna("AA"), kScheme).score == 4);

    const QueryProfile acgt(dna("ACGT"), kScheme, VectorSpec(p));
    CHECK(align_lazyf(acgt, dna("AGT"), kScheme, true).score == 4);
    CHECK(align_lazyf(acgt, dna("AGT"), kScheme, false).score == 4);
    CHECK(align_scan(acgt, dna("AGT"), kScheme).score == 4);
  }
}

TEST_CASE("kernels agree with the scalar oracle") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 400; ++iter) {
    const auto scheme = swscan::testing::random_dna_scheme(rng);
    const auto q = swscan::testing::random_sequence(rng, uniform(rng, 1, 120), 4);
    const auto r = swscan::testing::random_sequence(rng, uniform(rng, 1, 120), 4);
    const auto expect = sw_scalar_score(q, r, scheme);
    for (std::size_t p : {2, 4, 8, 16, 32, 64}) {
      const QueryProfile prof(q, scheme, VectorSpec(p));
      const auto lazy = align_lazyf(prof, r, scheme, true);
      const auto noexit = align_lazyf(prof, r, scheme, false);
      const auto scan = align_scan(prof, r, scheme);
      REQUIRE_FALSE(scan.overflow);
      CHECK(lazy.score == expect);
      CHECK(noexit.score == expect);
      CHECK(scan.score == expect);
      CHECK(lazy.correction_passes <= noexit.correction_passes);
    }
  }
}

TEST_CASE("wildcards and a custom matrix go through the kernels") {
  const auto m = parse_matrix("A C G T\n5 -4 -4 -4\n-4 5 -4 -4\n-4 -4 5 -4\n-4 -4 -4 5\n");
  const ScoringScheme s(m.alphabet.size(), m.scores, 10, 1);
  const auto q = m.alphabet.encode("ACGTTGCAACGTAGCTAGCTAGGATC");
  const auto r = m.alphabet.encode("ACGTTGCTAGCTAGGGGGGATCACGT");
  const QueryProfile prof(q, s, VectorSpec(4));
  CHECK(align_scan(prof, r, s).score == sw_scalar_score(q, r, s));

  const Alphabet a = Alphabet::dna();
  const auto wq = a.encode("ACNNGT");
  const auto wr = a.encode("ACGTNN");
  const QueryProfile wprof(wq, kScheme, VectorSpec(8));
  CHECK(align_lazyf(wprof, wr, kScheme, true).score == sw_scalar_score(wq, wr, kScheme));
}

TEST_CASE("correction counters") {
  const auto s = ScoringScheme::match_mismatch(Alphabet::dna(), 10, -1, 2, 1);
  const EncodedSequence a(256, 0);
  for (std::size_t p : {2, 4, 8, 16, 32, 64}) {
    const VectorSpec spec(p);
    const QueryProfile prof(a, s, spec);
    const auto scan = align_scan(prof, a, s);
    REQUIRE(scan.column_passes.size() == a.size());
    for (auto steps : scan.column_passes) CHECK(steps == spec.log2_lanes());
    CHECK(scan.correction.shifts == a.size() * (spec.log2_lanes() + 1));
    CHECK(scan.correction.maxes == a.size() * spec.log2_lanes());
    CHECK(scan.correction.sat_subs == a.size() * spec.log2_lanes());
    CHECK(scan.correction.loads == 0);
    CHECK(scan.correction.stores == 0);

    const auto noexit = align_lazyf(prof, a, s, false);
    for (auto passes : noexit.column_passes) CHECK(passes == p);
    CHECK(noexit.correction.shifts == a.size() * p);

    const auto lazy = align_lazyf(prof, a, s, true);
    for (auto passes : lazy.column_passes) {
      CHECK(passes >= 1);
      CHECK(passes <= p);
    }
    CHECK(lazy.score == scan.score);
    CHECK(noexit.score == scan.score);
    if (p >= 4) CHECK(scan.counters.total() < noexit.counters.total());
  }
}

TEST_CASE("early exit passes grow on a gap-dominated input") {
  const auto s = ScoringScheme::match_mismatch(Alphabet::dna(), 10, -10, 2, 1);
  const auto q = dna(std::string(32, 'A') + std::string(480, 'C'));
  const auto r = dna(std::string(48, 'A'));
  std::uint64_t prev = 0;
  for (std::size_t p : {4, 8, 16, 32, 64}) {
    const QueryProfile prof(q, s, VectorSpec(p));
    const auto lazy = align_lazyf(prof, r, s, true);
    CHECK(lazy.correction_passes > prev);
    prev = lazy.correction_passes;
    CHECK(lazy.score == sw_scalar_score(q, r, s));
  }
}

TEST_CASE("overflow is flagged") {
  const auto s = ScoringScheme::match_mismatch(Alphabet::dna(), 100, -1, 2, 1);
  const EncodedSequence a(700, 0);
  const QueryProfile prof(a, s, VectorSpec(16));
  CHECK(align_scan(prof, a, s).overflow);
  CHECK(align_lazyf(prof, a, s, true).overflow);
  const QueryProfile small(EncodedSequence(100, 0), s, VectorSpec(16));
  const auto ok = align_scan(small, EncodedSequence(100, 0), s);
  CHECK_FALSE(ok.overflow);
  CHECK(ok.score == 10000);
}

TEST_CASE("profile mismatch and empty reference") {
  const QueryProfile prof(dna("ACGT"), kScheme, VectorSpec(4));
  const auto other = ScoringScheme::match_mismatch(Alphabet::dna(), 2, -1, 4, 1);
  try {
    align_scan(prof, dna("ACGT"), other);
    FAIL("expected ProfileMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kProfileMismatch);
  }
  ReferenceBackend wrong_lanes(VectorSpec(8));
  try {
    align_lazyf(wrong_lanes, prof, dna("ACGT"), true);
    FAIL("expected ProfileMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kProfileMismatch);
  }
  const auto empty = align_scan(prof, EncodedSequence{}, kScheme);
  CHECK(empty.score == 0);
  CHECK(empty.column_passes.empty());
}

TEST_CASE("fixed-width kernels match the run-time-width reference exactly") {
  std::mt19937_64 rng(6060);
  for (int iter = 0; iter < 300; ++iter) {
    const VectorSpec spec(std::size_t{1} << uniform(rng, 1, 6));
    const auto scheme = swscan::testing::random_dna_scheme(rng);
    const auto q = swscan::testing::random_sequence(rng, uniform(rng, 1, 150), 5);
    const auto r = swscan::testing::random_sequence(rng, uniform(rng, 0, 150), 5);
    const QueryProfile prof(q, scheme, spec);
    for (bool exit : {true, false}) {
      const auto a = align_lazyf(prof, r, scheme, exit, BackendKind::kDynamicReference);
      const auto b = align_lazyf(prof, r, scheme, exit, BackendKind::kReference);
      CHECK(a.score == b.score);
      CHECK(a.overflow == b.overflow);
      CHECK(a.counters == b.counters);
      CHECK(a.correction == b.correction);
      CHECK(a.column_passes == b.column_passes);
    }
    const auto a = align_scan(prof, r, scheme, BackendKind::kDynamicReference);
    const auto b = align_scan(prof, r, scheme, BackendKind::kReference);
    CHECK(a.score == b.score);
    CHECK(a.overflow == b.overflow);
    CHECK(a.counters == b.counters);
    CHECK(a.correction == b.correction);
    CHECK(a.column_passes == b.column_passes);
  }
  const auto s = ScoringScheme::match_mismatch(Alphabet::dna(), 100, -1, 2, 1);
  const EncodedSequence big(700, 0);
  for (std::size_t p : {2, 16, 64}) {
    const QueryProfile prof(big, s, VectorSpec(p));
    CHECK(align_scan(prof, big, s, BackendKind::kReference).overflow);
    CHECK(align_scan(prof, big, s, BackendKind::kDynamicReference).overflow);
  }
}

#if SWSCAN_HAVE_SSE2
TEST_CASE("sse2 kernels match the reference backend exactly") {
  std::mt19937_64 rng(8080);
  const VectorSpec spec(8);
  CHECK(backend_available(BackendKind::kSse2, spec));
  CHECK_FALSE(backend_available(BackendKind::kSse2, VectorSpec(16)));
  for (int iter = 0; iter < 200; ++iter) {
    const auto scheme = swscan::testing::random_dna_scheme(rng);
    const auto q = swscan::testing::random_sequence(rng, uniform(rng, 1, 200), 4);
    const auto r = swscan::testing::random_sequence(rng, uniform(rng, 1, 200), 4);
    const QueryProfile prof(q, scheme, spec);
    for (bool exit : {true, false}) {
      const auto a = align_lazyf(prof, r, scheme, exit, BackendKind::kDynamicReference);
      const auto b = align_lazyf(prof, r, scheme, exit, BackendKind::kSse2);
      CHECK(a.score == b.score);
      CHECK(a.counters == b.counters);
      CHECK(a.column_passes == b.column_passes);
    }
    const auto a = align_scan(prof, r, scheme, BackendKind::kDynamicReference);
    const auto b = align_scan(prof, r, scheme, BackendKind::kSse2);
    CHECK(a.score == b.score);
    CHECK(a.counters == b.counters);
  }
  const auto s = ScoringScheme::match_mismatch(Alphabet::dna(), 100, -1, 2, 1);
  const EncodedSequence big(700, 0);
  const QueryProfile prof(big, s, spec);
  CHECK(align_scan(prof, big, s, BackendKind::kSse2).overflow);
}
#endif
