#include "trp/catalog.hpp"

#include "trp/errors.hpp"

namespace trp {

namespace {

const TernaryForm X = TernaryForm::linear(1, 0, 0);
const TernaryForm Y = TernaryForm::linear(0, 1, 0);
const TernaryForm Z = TernaryForm::linear(0, 0, 1);

TernaryForm q(long a) { return TernaryForm(0, {{{0, 0, 0}, Rational(a)}}); }
TernaryForm q(const Rational& a) { return TernaryForm(0, {{{0, 0, 0}, a}}); }

// Ellipses x^2 + 4y^2 = 4 and 4x^2 + y^2 = 4; the circle x^2 + y^2 = 4 meets each of them at the
// rational points (+-2, 0) or (0, +-2).
TernaryForm ellipse1() { return X * X + q(4) * Y * Y - q(4) * Z * Z; }
TernaryForm ellipse2() { return q(4) * X * X + Y * Y - q(4) * Z * Z; }
TernaryForm circle4() { return X * X + Y * Y - q(4) * Z * Z; }
// Quartic with four ovals, one around each intersection point of the ellipses; it contains
// (+-2 : 0 : 1) and (0 : +-2 : 1).
TernaryForm four_oval_quartic() { return ellipse1() * ellipse2() - Z * Z * circle4(); }

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> out;
    out.push_back({"circle", "x^2 + y^2 - z^2", X * X + Y * Y - Z * Z});
    out.push_back({"small_circle", "(x - 3z)^2 + y^2 - z^2/4",
                   (X - q(3) * Z) * (X - q(3) * Z) + Y * Y - q(Rational(1, 4)) * Z * Z});
    out.push_back({"cubic_oval", "y^2 z - x^3 + x z^2: pseudo-line and one oval",
                   Y * Y * Z - X * X * X + X * Z * Z});
    out.push_back({"cubic_no_oval", "y^2 z - x^3 - x z^2: pseudo-line only", Y * Y * Z - X * X * X - X * Z * Z});
    out.push_back({"harnack_quartic",
                   "(x^2 + 4y^2 - 4z^2)(4x^2 + y^2 - 4z^2) + z^4: two ellipses perturbed into four ovals",
                   ellipse1() * ellipse2() + pow(Z, 4)});
    out.push_back({"three_oval_quartic",
                   "(x^2 + 4y^2 - 4z^2)(4x^2 + y^2 - 4z^2) + z^3 (z - x - y): one of the four ovals merged away",
                   ellipse1() * ellipse2() + pow(Z, 3) * (Z - X - Y)});
    out.push_back({"empty_quartic", "x^4 + y^4 + z^4: no real points", pow(X, 4) + pow(Y, 4) + pow(Z, 4)});
    out.push_back({"separating_quintic",
                   "(10x - 9z) Q + z^3 K / 100 with Q = (x^2 + 4y^2 - 4z^2)(4x^2 + y^2 - 4z^2) - z^2 K, "
                   "K = x^2 + y^2 - 4z^2: the line x = 9/10 splits the four ovals of Q two and two; "
                   "ovals in non-convex position",
                   (q(10) * X - q(9) * Z) * four_oval_quartic() + q(Rational(1, 100)) * pow(Z, 3) * circle4()});
    out.push_back({"convex_quintic",
                   "(x + y + 10z) Q + z^3 K / 100 with the same Q and K: the line stays far from the "
                   "four ovals; ovals in convex position",
                   (X + Y + q(10) * Z) * four_oval_quartic() + q(Rational(1, 100)) * pow(Z, 3) * circle4()});
    out.push_back({"three_component_quintic",
                   "(x + y + 10z)(x^2 + 2y^2 - z^2)((x - 4z)^2 + 3y^2 - z^2) + z^5 / 100: pseudo-line and "
                   "two ovals",
                   (X + Y + q(10) * Z) * (X * X + q(2) * Y * Y - Z * Z) *
                           ((X - q(4) * Z) * (X - q(4) * Z) + q(3) * Y * Y - Z * Z) +
                       q(Rational(1, 100)) * pow(Z, 5)});
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw DomainError("unknown catalog entry: " + name);
}

}  // namespace trp
