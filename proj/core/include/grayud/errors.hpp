#ifndef GRAYUD_ERRORS_HPP
#define GRAYUD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grayud {

// Invalid LCF code (inconsistent chord pairing, chord duplicating a cycle
// edge, bad repeat count). Carries the first offending position.
class LcfError : public std::runtime_error {
public:
    LcfError(std::string message, int position)
        : std::runtime_error(std::move(message)), position_(position) {}
    int position() const { return position_; }

private:
    int position_;
};

// Parameter outside the geometric domain (circles fail to intersect
// transversally).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(std::string message)
        : std::runtime_error(std::move(message)) {}
};

// Two vertices of a constructed embedding collide (separation below the
// coincidence threshold). Names the offending pair.
class DegenerateError : public std::runtime_error {
public:
    DegenerateError(std::string message, int a, int b, double separation)
        : std::runtime_error(std::move(message)),
          a_(a), b_(b), separation_(separation) {}
    int vertex_a() const { return a_; }
    int vertex_b() const { return b_; }
    double separation() const { return separation_; }

private:
    int a_, b_;
    double separation_;
};

// Instance too large for an exhaustive operation.
class ScaleError : public std::runtime_error {
public:
    explicit ScaleError(std::string message)
        : std::runtime_error(std::move(message)) {}
};

// Malformed serialized document; carries a human-readable location.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::string location)
        : std::runtime_error(std::move(message)), location_(std::move(location)) {}
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

}  // namespace grayud

#endif
