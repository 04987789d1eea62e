#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "petsql/catalog.hpp"

namespace petsql {

struct PromptFlags {
    bool use_or = true; // optimization-rule sentence in the instruction
    bool use_cv = true; // sampled cell value block
    bool use_fk = true; // foreign key block
    std::size_t cv_rows = 3;
};

// A prompt with addressable sections so pruning works at line granularity.
// render() is a pure function of the fields.
struct PromptDoc {
    std::string instruction;
    std::vector<std::pair<std::string, std::string>> schema_lines; // (table, line)
    std::string cv_header; // empty means the block is absent
    std::vector<std::pair<std::string, std::string>> cv_lines;
    std::string fk_header;
    std::vector<std::pair<std::pair<std::string, std::string>, std::string>> fk_lines;
    std::vector<std::pair<std::string, std::string>> shots; // (question, sql)
    std::string question;

    std::size_t table_count() const { return schema_lines.size(); }
};

std::string render(const PromptDoc& doc);

// Builds the zero-shot prompt. Requires one CellSample per table when
// flags.use_cv is set (MissingSample otherwise).
PromptDoc render_zero_shot(const DbSchema& schema, const std::vector<CellSample>& samples,
                           const std::string& question, const PromptFlags& flags);

// Prefixes demonstrations onto a prompt. Demos are rendered in the order
// given; pass them most-similar-last so the nearest one sits next to the task.
PromptDoc render_few_shot(const std::vector<std::pair<std::string, std::string>>& demos,
                          PromptDoc base);

// Keeps only lines attributable to linked tables; FK lines survive only when
// both endpoints are linked, and the whole FK block goes when none survive.
// Names not present in the doc are ignored and reported through `warnings`.
PromptDoc prune(PromptDoc doc, const std::set<std::string>& linked,
                std::vector<std::string>* warnings = nullptr);

} // namespace petsql
