#pragma once

#include <stdexcept>
#include <string>

namespace embcam {

enum class Errc {
  bad_magic,
  unsupported_version,
  unsupported_dtype,
  truncated_file,
  trailing_bytes,
  non_finite,
  io_failure,
  shape_error,
  shape_mismatch,
  zero_norm,
  missing_params,
  no_positives,
  no_negatives,
  empty_triplets,
  all_excluded,
  empty_database,
  k_too_large,
  channel_out_of_range,
  all_zero_heatmap,
  missing_region,
  empty_foreground,
  invalid_record,
  bad_manifest,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace embcam
