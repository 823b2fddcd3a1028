#include "corank/wiki/person.hpp"

#include "corank/wiki/wikitext.hpp"

namespace corank::wiki {

namespace {

// Matches category against a "YYYY ..." pattern; returns the year.
std::optional<int> match_year_pattern(const std::string& category,
                                      const std::string& pattern) {
    const std::size_t ph = pattern.find("YYYY");
    if (ph == std::string::npos) return std::nullopt;
    const std::string prefix = pattern.substr(0, ph);
    const std::string suffix = pattern.substr(ph + 4);
    if (category.size() <= prefix.size() + suffix.size()) return std::nullopt;
    if (category.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    if (category.compare(category.size() - suffix.size(), suffix.size(),
                         suffix) != 0)
        return std::nullopt;
    const std::string middle = category.substr(
        prefix.size(), category.size() - prefix.size() - suffix.size());
    if (middle.empty() || middle.size() > 4) return std::nullopt;
    int year = 0;
    for (char c : middle) {
        if (c < '0' || c > '9') return std::nullopt;
        year = year * 10 + (c - '0');
    }
    return year;
}

}  // namespace

PersonArticle extract_person_meta(const RawPage& page,
                                  const LanguageConfig& config) {
    PersonArticle person;
    person.title = normalize_title(page.title);
    person.outlinks = extract_links(page.wikitext);

    for (const std::string& cat :
         extract_categories(page.wikitext, config.category_namespaces)) {
        if (cat == config.living_category) {
            person.is_living_category = true;
            continue;
        }
        if (!person.birth_year)
            if (const auto y = match_year_pattern(cat, config.birth_pattern))
                person.birth_year = y;
        if (!person.death_year)
            if (const auto y = match_year_pattern(cat, config.death_pattern))
                person.death_year = y;
    }
    return person;
}

bool cohort_eligible(const PersonArticle& p) {
    if (!p.birth_year || *p.birth_year <= 1880) return false;
    return !p.death_year || *p.death_year > 2010;
}

}  // namespace corank::wiki
