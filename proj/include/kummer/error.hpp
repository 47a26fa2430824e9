#pragma once

#include <stdexcept>
#include <string>

namespace kummer {

// Diagnostic codes. Every distinct failure mode documented in the library
// contract maps to exactly one code so callers can dispatch without parsing
// messages.
enum class errc {
    invalid_modulus,
    no_unique_solution,
    invalid_prime,
    overflow,
    bad_degree,
    bad_characteristic,
    bad_multiplicity,
    duplicate_label,
    dth_power,
    bad_index,
    unsupported_place,
    parse_error,
    bad_argument,
    io_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

}  // namespace kummer
