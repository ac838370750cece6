#include "balgf/report.hpp"

#include <algorithm>
#include <ostream>

namespace balgf {

void Report::add(std::string identity, int k, bool passed, std::string note) {
    entries_.push_back(CheckEntry{suite_, std::move(identity), k, passed, std::move(note)});
}

void Report::append(const Report& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

std::size_t Report::failures() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const CheckEntry& e) { return !e.passed; }));
}

void print_report(std::ostream& os, const Report& report) {
    for (const auto& e : report.entries()) {
        os << (e.passed ? "PASS " : "FAIL ") << e.suite << ' ' << e.identity << " k=" << e.k;
        if (!e.note.empty()) os << ' ' << e.note;
        os << '\n';
    }
}

}  // namespace balgf
