#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corank/wiki/dump.hpp"

namespace corank::wiki {

// Per-language-edition category conventions. Year patterns contain the
// placeholder "YYYY", e.g. "YYYY births".
struct LanguageConfig {
    std::vector<std::string> category_namespaces = {"Category"};
    std::string living_category = "Living people";
    std::string birth_pattern = "YYYY births";
    std::string death_pattern = "YYYY deaths";
};

struct PersonArticle {
    std::string title;
    std::optional<int> birth_year;
    std::optional<int> death_year;
    bool is_living_category = false;
    std::vector<std::string> outlinks;
};

PersonArticle extract_person_meta(const RawPage& page,
                                  const LanguageConfig& config);

// Born after 1880 and not dead until 2010.
bool cohort_eligible(const PersonArticle& p);

}  // namespace corank::wiki
