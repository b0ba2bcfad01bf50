#include "osculant/multipoly.hpp"

namespace osculant::exactalg {

std::pair<MultiPoly, MultiPoly> split_real_imaginary(const GaussMultiPoly& p) {
    MultiPoly re(p.nvars()), im(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (c.re != 0) re.add_term(m, c.re);
        if (c.im != 0) im.add_term(m, c.im);
    }
    return {re, im};
}

std::string default_var_name(size_t i) { return "x" + std::to_string(i); }

} // namespace osculant::exactalg
