#pragma once

#include <string>
#include <vector>

#include "glmn/glsuper.hpp"
#include "glmn/superelem.hpp"

namespace glmn {

enum class Side { Left, Right };

/// A superderivation of the coordinate ring: the right derivation _{kl}D
/// acts by (x_uv) _{kl}D = delta_vk x_ul, the left derivation D_{kl} by
/// D_{kl}(x_uv) = delta_lu x_kv. A derivation is odd exactly when (k,l)
/// lies in I12 or I21.
struct Derivation {
    Side side;
    int k, l;

    bool odd(const RingSpec& ring) const { return ring.odd(k, l); }
    std::string str() const {
        return side == Side::Right
                   ? "_" + std::to_string(k) + std::to_string(l) + "D"
                   : "D_" + std::to_string(k) + std::to_string(l);
    }
};

/// Image of a single variable; zero element when the derivation kills it.
SuperElem derive_gen(RingSpec ring, const Derivation& d, int u, int v);

/// Extension of derive_gen to the whole localized ring by the signed
/// Leibniz rule. For homogeneous g, h:
///   (g h) _{kl}D = g (h _{kl}D) + (-1)^{|h||d|} (g _{kl}D) h
///   D_{kl}(g h) = D_{kl}(g) h + (-1)^{|g||d|} g D_{kl}(h)
/// Denominator powers are even and are handled by the quotient rule.
SuperElem derive(const Derivation& d, const SuperElem& f);

struct CellCheck {
    std::string cell;         // e.g. "(y_13) _{21}D"
    std::string expected_str;
    std::string computed_str;
    bool pass = false;
};

struct TableReport {
    std::string title;
    std::vector<CellCheck> cells;
    bool all_pass() const {
        for (auto& c : cells)
            if (!c.pass) return false;
        return true;
    }
    std::size_t fail_count() const {
        std::size_t k = 0;
        for (auto& c : cells)
            if (!c.pass) ++k;
        return k;
    }
    std::string text() const;
};

/// Checks every cell of the right action table (y_ij) _{kl}D against a value
/// computed from first principles. Derivations with k = l inside a diagonal
/// block are excluded.
TableReport verify_right_table(const GenericMatrix& gm);

/// Same for the left action table D_{kl}(y_ij).
TableReport verify_left_table(const GenericMatrix& gm);

/// For every y_ij and every position (k,l) with k != l, applying the same
/// derivation twice must give zero (both sides).
TableReport verify_divided_powers(const GenericMatrix& gm);

/// (D1) _{kl}D = 0 for even off-diagonal (k,l), and (D1) _{kl}D = D1 y_kl
/// for odd (k,l); same on the left.
TableReport verify_det_derivative(const GenericMatrix& gm);

}  // namespace glmn
