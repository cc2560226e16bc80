#include "mvl/algebra.hpp"

namespace mvl {

std::string algebra_name(Algebra a) {
    switch (a) {
        case Algebra::Lukasiewicz: return "lukasiewicz";
        case Algebra::Godel: return "godel";
        case Algebra::Product: return "product";
    }
    throw std::logic_error("unknown algebra");
}

Algebra algebra_from_name(const std::string& name) {
    if (name == "lukasiewicz" || name == "l") return Algebra::Lukasiewicz;
    if (name == "godel" || name == "g") return Algebra::Godel;
    if (name == "product" || name == "pi") return Algebra::Product;
    throw std::invalid_argument("unknown logic '" + name + "' (expected lukasiewicz|godel|product)");
}

TruthValue tnorm(Algebra a, const TruthValue& x, const TruthValue& y) {
    switch (a) {
        case Algebra::Lukasiewicz: {
            Rat s = x.rat() + y.rat() - 1;
            return sgn(s) < 0 ? TruthValue::zero() : TruthValue(s);
        }
        case Algebra::Godel:
            return tv_min(x, y);
        case Algebra::Product:
            return TruthValue(x.rat() * y.rat());
    }
    throw std::logic_error("unknown algebra");
}

TruthValue residuum(Algebra a, const TruthValue& x, const TruthValue& y) {
    if (x <= y) return TruthValue::one();
    switch (a) {
        case Algebra::Lukasiewicz: return TruthValue(1 - x.rat() + y.rat());
        case Algebra::Godel: return y;
        case Algebra::Product: return TruthValue(y.rat() / x.rat());  // x > y >= 0, so x > 0
    }
    throw std::logic_error("unknown algebra");
}

TruthValue tconorm(Algebra a, const TruthValue& x, const TruthValue& y) {
    switch (a) {
        case Algebra::Lukasiewicz: {
            Rat s = x.rat() + y.rat();
            return s > 1 ? TruthValue::one() : TruthValue(s);
        }
        case Algebra::Godel:
            return tv_max(x, y);
        case Algebra::Product:
            return TruthValue(x.rat() + y.rat() - x.rat() * y.rat());
    }
    throw std::logic_error("unknown algebra");
}

TruthValue coresiduum(Algebra a, const TruthValue& x, const TruthValue& y) {
    if (x >= y) return TruthValue::zero();
    switch (a) {
        case Algebra::Lukasiewicz: return TruthValue(y.rat() - x.rat());
        case Algebra::Godel: return y;
        case Algebra::Product: return TruthValue((y.rat() - x.rat()) / (1 - x.rat()));  // x < y <= 1, so x < 1
    }
    throw std::logic_error("unknown algebra");
}

TruthValue residuum_oracle(Algebra a, OracleMode mode, const TruthValue& x, const TruthValue& y, long n) {
    if (n < 2) throw std::invalid_argument("oracle grid size must be >= 2");
    if (mode == OracleMode::TnormSup) {
        // z = 0 always qualifies: T(0,x) = 0 <= y.
        TruthValue best = TruthValue::zero();
        for (long i = n; i >= 1; --i) {
            TruthValue z(i, n);
            if (tnorm(a, z, x) <= y) {
                best = z;
                break;
            }
        }
        return best;
    }
    // z = 1 always qualifies: S(1,x) = 1 >= y.
    TruthValue best = TruthValue::one();
    for (long i = 0; i < n; ++i) {
        TruthValue z(i, n);
        if (tconorm(a, z, x) >= y) {
            best = z;
            break;
        }
    }
    return best;
}

TruthValue double_negation(Algebra a, const TruthValue& x) {
    if (a == Algebra::Lukasiewicz)
        throw std::invalid_argument("double_negation requires Gödel or product algebra");
    return x.is_zero() ? TruthValue::zero() : TruthValue::one();
}

}  // namespace mvl
