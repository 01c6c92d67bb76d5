#include "swscan/kernels.hpp"

#include "swscan/sse2_backend.hpp"

namespace swscan {

bool backend_available(BackendKind kind, VectorSpec spec) {
  switch (kind) {
    case BackendKind::kReference:
    case BackendKind::kDynamicReference: return true;
    case BackendKind::kSse2:
#if SWSCAN_HAVE_SSE2
      return spec.lanes() == Sse2Backend::kLanes;
#else
      return false;
#endif
  }
  return false;
}

namespace {

template <class Fn>
std::vector<ScoreVector> run_correction(const ScoreVector& f, std::vector<ScoreVector> hstore,
                                        VectorSpec spec, Fn&& fn) {
  ReferenceBackend be(spec);
  fn(be, f, std::span<ScoreVector>(hstore));
  return hstore;
}

// Runs fn on the fixed-width reference backend matching spec.
template <class Fn>
AlignmentResult with_fixed_reference(VectorSpec spec, Fn&& fn) {
  switch (spec.lanes()) {
    case 2: { FixedReferenceBackend<2> be; return fn(be); }
    case 4: { FixedReferenceBackend<4> be; return fn(be); }
    case 8: { FixedReferenceBackend<8> be; return fn(be); }
    case 16: { FixedReferenceBackend<16> be; return fn(be); }
    case 32: { FixedReferenceBackend<32> be; return fn(be); }
    default: { FixedReferenceBackend<64> be; return fn(be); }
  }
}

void require_backend(BackendKind kind, VectorSpec spec) {
  if (!backend_available(kind, spec))
    throw Error(ErrorCode::kInvalidLanes,
                "requested backend is not available for " + std::to_string(spec.lanes()) + " lanes");
}

}  // namespace

std::vector<ScoreVector> correct_separated(const ScoreVector& f, std::vector<ScoreVector> hstore,
                                           Score gap_extend, VectorSpec spec) {
  return run_correction(f, std::move(hstore), spec, [&](auto& be, auto v, auto h) {
    correct_separated(be, v, h, gap_extend);
  });
}

std::vector<ScoreVector> correct_inverted(const ScoreVector& f, std::vector<ScoreVector> hstore,
                                          Score gap_extend, VectorSpec spec) {
  return run_correction(f, std::move(hstore), spec, [&](auto& be, auto v, auto h) {
    correct_inverted(be, v, h, gap_extend);
  });
}

std::vector<ScoreVector> correct_scan(const ScoreVector& f, std::vector<ScoreVector> hstore,
                                      Score gap_extend, VectorSpec spec) {
  return run_correction(f, std::move(hstore), spec, [&](auto& be, auto v, auto h) {
    correct_scan(be, v, h, gap_extend);
  });
}

ScoreVector weighted_max_scan(const ScoreVector& f, std::uint64_t decay, VectorSpec spec) {
  ReferenceBackend be(spec);
  return weighted_max_scan(be, f, decay);
}

AlignmentResult align_lazyf(const QueryProfile& profile, const EncodedSequence& ref,
                            const ScoringScheme& scheme, bool early_exit, BackendKind backend) {
  detail::check_profile(profile, scheme, profile.spec());
  require_backend(backend, profile.spec());
#if SWSCAN_HAVE_SSE2
  if (backend == BackendKind::kSse2) {
    Sse2Backend be;
    return align_lazyf(be, profile, ref, early_exit);
  }
#endif
  if (backend == BackendKind::kDynamicReference) {
    ReferenceBackend be(profile.spec());
    return align_lazyf(be, profile, ref, early_exit);
  }
  return with_fixed_reference(profile.spec(), [&](auto& be) {
    return align_lazyf(be, profile, ref, early_exit);
  });
}

AlignmentResult align_scan(const QueryProfile& profile, const EncodedSequence& ref,
                           const ScoringScheme& scheme, BackendKind backend) {
  detail::check_profile(profile, scheme, profile.spec());
  require_backend(backend, profile.spec());
#if SWSCAN_HAVE_SSE2
  if (backend == BackendKind::kSse2) {
    Sse2Backend be;
    return align_scan(be, profile, ref);
  }
#endif
  if (backend == BackendKind::kDynamicReference) {
    ReferenceBackend be(profile.spec());
    return align_scan(be, profile, ref);
  }
  return with_fixed_reference(profile.spec(), [&](auto& be) {
    return align_scan(be, profile, ref);
  });
}

}  // namespace swscan
