#ifndef CONGAP_CORE_ERROR_HPP
#define CONGAP_CORE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace congap {

// Error categories; the C API maps these 1:1 onto congap_status codes.
enum class errc {
    argument,             // bad call (null, range, modulus mismatch, ...)
    parse,                // polynomial or certificate text rejected
    domain,               // mathematical precondition violated
    square_discriminant,  // no quadratic subfield (disc is a perfect square)
    too_large,            // exceeds a configured size/memory cap
    reducible,            // polynomial is (definitely) reducible
    unknown_irreducible,  // irreducibility undecided and not assumed
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

// Parse failures carry the byte offset of the offending token.
class parse_error : public error {
  public:
    parse_error(std::size_t position, const std::string& what)
        : error(errc::parse, "syntax error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

}  // namespace congap

#endif
