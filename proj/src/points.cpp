#include "osculant/points.hpp"

namespace osculant::schubert {

std::string OsculationPoint::to_text() const {
    if (infinite_) return "inf";
    return exactalg::to_string(finite_);
}

OsculationPoint OsculationPoint::from_text(const std::string& text) {
    if (text == "inf" || text == "+inf") return infinity();
    // split "re<+|->im*i" at the sign belonging to the imaginary part
    size_t split = std::string::npos;
    for (size_t i = 1; i < text.size(); ++i) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/' &&
            text.find("*i", i) != std::string::npos) {
            split = i;
            break;
        }
    }
    if (split == std::string::npos || text.find("*i") == std::string::npos) {
        if (text.find('i') != std::string::npos && text.find("*i") == std::string::npos)
            throw domain_error("bad point literal: '" + text + "'");
        if (text.find("*i") != std::string::npos)
            throw domain_error("bad point literal: '" + text + "'");
        return real(exactalg::rational_from_string(text));
    }
    std::string re = text.substr(0, split);
    std::string rest = text.substr(split);
    size_t star = rest.rfind("*i");
    if (star == std::string::npos || star + 2 != rest.size())
        throw domain_error("bad point literal: '" + text + "'");
    std::string im = rest.substr(0, star);
    if (im == "+" || im == "-") im += "1";
    if (!im.empty() && im[0] == '+') im = im.substr(1);
    return finite(GaussianRational(exactalg::rational_from_string(re),
                                   exactalg::rational_from_string(im)));
}

} // namespace osculant::schubert
