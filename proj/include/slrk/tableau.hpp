#pragma once

#include "slrk/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slrk {

/// Explicit Runge-Kutta tableau with exact rational coefficients.
///
/// The abscissae c are always the row sums of a; they are never supplied
/// independently. Instances are immutable once built.
class Tableau {
public:
    /// `lower_rows[i]` holds a[i][0..i-1]; `b` has one entry per stage.
    /// Throws std::invalid_argument on shape errors.
    Tableau(std::string name, std::vector<std::vector<Rational>> lower_rows, std::vector<Rational> b);

    std::size_t stages() const noexcept { return b_.size(); }
    const std::string& name() const noexcept { return name_; }

    /// a[i][j]; zero for j >= i.
    const Rational& a(std::size_t i, std::size_t j) const;
    const std::vector<Rational>& b() const noexcept { return b_; }
    const std::vector<Rational>& c() const noexcept { return c_; }
    /// Full s x s matrix (row-major rows, zeros on and above the diagonal).
    const std::vector<std::vector<Rational>>& a_matrix() const noexcept { return a_; }

    friend bool operator==(const Tableau& x, const Tableau& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

private:
    std::string name_;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::vector<Rational> c_;
};

Tableau rk6_tableau();
Tableau rk4_tableau();
Tableau heun3_tableau();
Tableau euler_tableau();

/// Looks up a built-in tableau by name ("rk6", "rk4", "heun3", "euler").
std::optional<Tableau> builtin_tableau(std::string_view name);
std::vector<std::string> builtin_tableau_names();

enum class Increment { zero, step, irregular };

/// Whether the abscissae are ordered and equally spaced, i.e. whether one
/// propagator exp(delta_c h A) suffices for Lawson stepping.
struct SpacingReport {
    bool conforming = false;
    /// The unique nonzero increment; empty when there is none or when the
    /// report is non-conforming.
    std::optional<Rational> delta_c;
    /// increments[i] classifies c[i+1] - c[i].
    std::vector<Increment> increments;
};

SpacingReport spacing_report(const Tableau& t);

enum class ParseErrorKind { malformed_rational, not_explicit, dimension_mismatch, malformed_structure };

class TableauParseError : public std::runtime_error {
public:
    TableauParseError(ParseErrorKind kind, int line, const std::string& what);
    ParseErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

/// Text format:
///
///     stages s
///     <row 1 of a: empty>
///     a21
///     a31 a32
///     ...
///     b: b1 ... bs
///     name: <label>        (optional)
///
/// A row may also list all s entries, in which case entries on or above the
/// diagonal must be zero. Lines starting with '#' are ignored.
Tableau parse_tableau(std::string_view text);
std::string serialize_tableau(const Tableau& t);

Tableau load_tableau(const std::string& path);
void save_tableau(const Tableau& t, const std::string& path);

/// Floating-point rendering, used by the steppers and the search.
struct FloatTableau {
    std::string name;
    std::vector<std::vector<double>> a;  // s x s, strictly lower
    std::vector<double> b;
    std::vector<double> c;

    std::size_t stages() const noexcept { return b.size(); }
};

FloatTableau to_float(const Tableau& t);

}  // namespace slrk
