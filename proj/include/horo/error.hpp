#pragma once

#include <stdexcept>
#include <string>

namespace horo {

enum class errc {
    dimension_mismatch,
    out_of_domain,
    malformed_star_coordinate,
    unsupported_space,
    monotonicity_violation,
    radius_unreachable,
    gauge_violation,
    not_isometric,
    not_a_boundary_horofunction,
    not_escaping,
    undecided,
    empty_input,
    bad_argument,
    parse_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw error(c, msg); }

}  // namespace horo
