#pragma once

#include <string>

#include "nalab/linalg.hpp"

namespace nalab {

// Basis-monomial text for vectors and tensors, e.g. "e3+e4", "2(e4⊗e4)",
// "-e6⊗e5⊗e6 - e5⊗e6⊗e6". Indices are 1-based in rendered output.

namespace detail {

inline void append_term(std::string& out, const Rat& c, const std::string& monomial) {
    const bool first = out.empty();
    Rat coeff = c;
    if (!first) {
        if (coeff.sign() < 0) {
            out += " - ";
            coeff = -coeff;
        } else {
            out += " + ";
        }
    }
    if (coeff.is_one()) {
        out += monomial;
    } else if (coeff == Rat(-1)) {
        out += "-" + monomial;
    } else {
        out += coeff.str() + "(" + monomial + ")";
    }
}

} // namespace detail

inline std::string render(const Vec& v, const std::string& sym = "e") {
    std::string out;
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (!v[i].is_zero()) detail::append_term(out, v[i], sym + std::to_string(i + 1));
    return out.empty() ? "0" : out;
}

inline std::string render(const Tensor2& t, const std::string& sym = "e") {
    std::string out;
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            if (!t.at(i, j).is_zero())
                detail::append_term(out, t.at(i, j),
                                    sym + std::to_string(i + 1) + "⊗" + sym + std::to_string(j + 1));
    return out.empty() ? "0" : out;
}

inline std::string render(const Tensor3& t, const std::string& sym = "e") {
    std::string out;
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k)
                if (!t.at(i, j, k).is_zero())
                    detail::append_term(out, t.at(i, j, k),
                                        sym + std::to_string(i + 1) + "⊗" + sym +
                                            std::to_string(j + 1) + "⊗" + sym +
                                            std::to_string(k + 1));
    return out.empty() ? "0" : out;
}

} // namespace nalab
