#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace petsql {

struct ColumnDef {
    std::string name;
    std::string declared_type;
};

struct TableSchema {
    std::string name; // original casing from the manifest
    std::vector<ColumnDef> columns;
};

struct ForeignKey {
    std::string from_table;
    std::string from_column;
    std::string to_table;
    std::string to_column;
};

struct PrimaryKey {
    std::string table;
    std::string column;
};

struct DbSchema {
    std::string db_id;
    std::vector<TableSchema> tables; // manifest order; prompt rendering depends on it
    std::vector<ForeignKey> foreign_keys;
    std::vector<PrimaryKey> primary_keys;

    // Case-insensitive lookup; nullptr when absent.
    const TableSchema* find_table(std::string_view name) const;
    std::vector<std::string> table_names() const;
};

struct DatabaseCatalog {
    std::map<std::string, DbSchema> databases;

    bool contains(const std::string& db_id) const { return databases.count(db_id) > 0; }
    // Throws UnknownDatabase when db_id is not present.
    const DbSchema& at(const std::string& db_id) const;
};

// One sampled block of cell values for a table. Value sequences are
// row-aligned: position i in every column comes from the same row.
struct CellSample {
    std::string table;
    std::vector<std::pair<std::string, std::vector<std::string>>> per_column_values;
};

// Loads a Spider-format tables manifest. Throws IoError when the file is
// missing, FormatError when required fields are absent or indices dangle.
DatabaseCatalog load_catalog(const std::filesystem::path& manifest_path);

// Samples up to n whole rows from the table, deterministic for a fixed seed.
// Rows are emitted in their original table order. NULL renders as `None`,
// blobs as x'..' truncated to 16 bytes, everything else via the engine's
// text conversion.
CellSample sample_cells(const std::filesystem::path& db_file, const TableSchema& schema,
                        std::size_t n, std::uint64_t seed);

// Conventional location of a database file below a Spider data root.
std::filesystem::path database_file(const std::filesystem::path& data_root,
                                    const std::string& db_id);

} // namespace petsql
