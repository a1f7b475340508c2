#include "adtk/report.hpp"

#include <algorithm>
#include <tuple>

namespace adtk {

std::vector<std::string> vec_strings(const Vec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

void Report::add(std::string condition, std::vector<int> witness, const Vec& left, const Vec& right) {
    failures_.push_back(Failure{std::move(condition), std::move(witness),
                                vec_strings(left), vec_strings(right)});
}

void Report::add_note(std::string condition, std::vector<int> witness) {
    failures_.push_back(Failure{std::move(condition), std::move(witness), {}, {}});
}

void Report::merge(const Report& other) {
    failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
}

void Report::finalize() {
    std::sort(failures_.begin(), failures_.end(), [](const Failure& a, const Failure& b) {
        return std::tie(a.condition, a.witness) < std::tie(b.condition, b.witness);
    });
}

} // namespace adtk
