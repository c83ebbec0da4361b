#ifndef NCDP_EXPR_HPP
#define NCDP_EXPR_HPP

// Expression language for potentials and polynomials:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/' | juxtaposition) factor)*
//   factor := atom ['^' uint]
//   atom   := rational | ident | '(' expr ')' | '-' atom
// An identifier spelled only with x, y, z is a word ("xy^2x" = x*y^2*x);
// any other identifier is a parameter. Division is by scalars only.

#include "ncdp/commpoly.hpp"
#include "ncdp/ncalg.hpp"
#include "ncdp/rational.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncdp::expr {

class ExprError : public std::runtime_error {
public:
    ExprError(const std::string& msg, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class Kind { Number, Variable, Parameter, Sum, Product, Quotient, Power, Negation, Group };

struct Node {
    Kind kind;
    int line = 1, column = 1;
    Rational value;                 // Number
    ncalg::Letter letter{};         // Variable
    std::string name;               // Parameter
    std::vector<NodePtr> children;  // Sum, Product, Quotient (2), Power (1), Negation (1), Group (1)
    std::vector<char> signs;        // Sum: '+' or '-' before each child (first may be '+')
    unsigned exponent = 0;          // Power
};

NodePtr parse_expression(std::string_view text);

// Canonical text; parsing it gives an identical tree.
std::string print(const NodePtr& n);

bool same_tree(const NodePtr& a, const NodePtr& b);

// Parameter names in order of first appearance.
std::vector<std::string> parameters(const NodePtr& n);

using Bindings = std::map<std::string, Rational>;

// Throws ExprError on an unbound parameter, a zero denominator or division
// by a non-scalar.
ncalg::NCPoly to_ncpoly(const NodePtr& n, const Bindings& params = {});
CommPoly to_commpoly(const NodePtr& n, const Bindings& params = {});

}  // namespace ncdp::expr

#endif  // NCDP_EXPR_HPP
