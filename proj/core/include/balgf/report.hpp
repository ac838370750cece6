#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace balgf {

/// One verified identity instance.
struct CheckEntry {
    std::string suite;
    std::string identity;
    int k = 0;
    bool passed = false;
    std::string note;
};

/// Verification results; failures are recorded, never thrown.
class Report {
public:
    Report() = default;
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    void add(std::string identity, int k, bool passed, std::string note = {});
    void append(const Report& other);

    [[nodiscard]] const std::string& suite() const noexcept { return suite_; }
    [[nodiscard]] std::span<const CheckEntry> entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t failures() const noexcept;
    [[nodiscard]] bool all_passed() const noexcept { return failures() == 0; }

private:
    std::string suite_;
    std::vector<CheckEntry> entries_;
};

/// "PASS suite identity k=3 [note]" per line.
void print_report(std::ostream& os, const Report& report);

}  // namespace balgf
