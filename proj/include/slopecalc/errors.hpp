// Error types shared across the library.
//
// A hypothesis_error marks a violated mathematical precondition; it always
// carries the citation tag of the criterion whose hypothesis failed, so that
// front ends can surface it verbatim.

#pragma once

#include <stdexcept>
#include <string>

namespace slopecalc {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class hypothesis_error : public std::runtime_error {
public:
    hypothesis_error(std::string citation, const std::string& what)
        : std::runtime_error(citation + ": " + what), citation_(std::move(citation)) {}

    const std::string& citation() const noexcept { return citation_; }

private:
    std::string citation_;
};

class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Citation tags used in verdicts and hypothesis errors.
namespace citation {
inline constexpr const char* prop_3_6 = "Prop 3.6";
inline constexpr const char* lemma_4_9 = "Lemma 4.9";
inline constexpr const char* cor_5_6 = "Cor 5.6";
inline constexpr const char* lemma_6_2 = "Lemma 6.2";
inline constexpr const char* section_6_2 = "Section 6.2";
inline constexpr const char* section_3_2 = "Section 3.2";
inline constexpr const char* def_5_1 = "Def 5.1";
inline constexpr const char* prop_5_3 = "Prop 5.3";
inline constexpr const char* prop_5_5 = "Prop 5.5";
inline constexpr const char* prop_5_8 = "Prop 5.8";
inline constexpr const char* remark_3_3 = "Remark 3.3";
}  // namespace citation

}  // namespace slopecalc
