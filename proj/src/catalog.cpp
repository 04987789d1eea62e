#include "petsql/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <sqlite3.h>

#include <json.hpp>

#include "petsql/errors.hpp"
#include "petsql/textutil.hpp"

namespace petsql {

namespace {

using nlohmann::json;

std::string quote_ident(const std::string& name) {
    std::string out = "\"";
    for (char c : name) {
        out += c;
        if (c == '"') out += '"';
    }
    out += "\"";
    return out;
}

struct SqliteDb {
    sqlite3* db = nullptr;
    ~SqliteDb() {
        if (db) sqlite3_close(db);
    }
};

struct SqliteStmt {
    sqlite3_stmt* stmt = nullptr;
    ~SqliteStmt() {
        if (stmt) sqlite3_finalize(stmt);
    }
};

std::string render_cell(sqlite3_stmt* stmt, int col) {
    switch (sqlite3_column_type(stmt, col)) {
    case SQLITE_NULL:
        return "None";
    case SQLITE_BLOB: {
        const auto* data = static_cast<const unsigned char*>(sqlite3_column_blob(stmt, col));
        int len = sqlite3_column_bytes(stmt, col);
        int shown = std::min(len, 16);
        static const char* hex = "0123456789ABCDEF";
        std::string out = "x'";
        for (int i = 0; i < shown; ++i) {
            out += hex[data[i] >> 4];
            out += hex[data[i] & 0xF];
        }
        out += "'";
        return out;
    }
    default: {
        const unsigned char* text = sqlite3_column_text(stmt, col);
        return text ? reinterpret_cast<const char*>(text) : "";
    }
    }
}

// Deterministic bounded draw; avoids std::uniform_int_distribution whose
// algorithm is implementation-defined.
std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t bound) {
    return bound == 0 ? 0 : gen() % bound;
}

} // namespace

const TableSchema* DbSchema::find_table(std::string_view name) const {
    for (const auto& t : tables) {
        if (iequals(t.name, name)) return &t;
    }
    return nullptr;
}

std::vector<std::string> DbSchema::table_names() const {
    std::vector<std::string> out;
    out.reserve(tables.size());
    for (const auto& t : tables) out.push_back(t.name);
    return out;
}

const DbSchema& DatabaseCatalog::at(const std::string& db_id) const {
    auto it = databases.find(db_id);
    if (it == databases.end()) throw UnknownDatabase("unknown database: " + db_id);
    return it->second;
}

DatabaseCatalog load_catalog(const std::filesystem::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw IoError("cannot open manifest: " + manifest_path.string());

    json manifest;
    try {
        in >> manifest;
    } catch (const json::exception& e) {
        throw FormatError("manifest is not valid JSON: " + std::string(e.what()));
    }
    if (!manifest.is_array()) throw FormatError("manifest root must be an array");

    DatabaseCatalog catalog;
    for (const auto& entry : manifest) {
        const char* required[] = {"db_id", "table_names_original", "column_names_original",
                                  "column_types", "foreign_keys", "primary_keys"};
        for (const char* field : required) {
            if (!entry.contains(field))
                throw FormatError(std::string("manifest entry missing field: ") + field);
        }

        DbSchema db;
        db.db_id = entry.at("db_id").get<std::string>();
        if (db.db_id.empty()) throw FormatError("empty db_id in manifest");
        if (catalog.databases.count(db.db_id))
            throw FormatError("duplicate db_id in manifest: " + db.db_id);

        const auto& table_names = entry.at("table_names_original");
        const auto& column_names = entry.at("column_names_original");
        const auto& column_types = entry.at("column_types");
        if (column_types.size() != column_names.size())
            throw FormatError(db.db_id + ": column_types and column_names_original disagree");

        db.tables.resize(table_names.size());
        std::set<std::string> seen_tables;
        for (std::size_t i = 0; i < table_names.size(); ++i) {
            db.tables[i].name = table_names[i].get<std::string>();
            if (!seen_tables.insert(to_lower(db.tables[i].name)).second)
                throw FormatError(db.db_id + ": duplicate table name " + db.tables[i].name);
        }

        // Global column index -> (table index, column name); -1 is the `*` slot.
        std::vector<std::pair<int, std::string>> global_columns;
        global_columns.reserve(column_names.size());
        for (std::size_t i = 0; i < column_names.size(); ++i) {
            const auto& pair = column_names[i];
            if (!pair.is_array() || pair.size() != 2)
                throw FormatError(db.db_id + ": malformed column_names_original entry");
            int table_idx = pair[0].get<int>();
            std::string col = pair[1].get<std::string>();
            global_columns.emplace_back(table_idx, col);
            if (table_idx == -1) continue;
            if (table_idx < 0 || table_idx >= static_cast<int>(db.tables.size()))
                throw FormatError(db.db_id + ": column references nonexistent table index");
            db.tables[table_idx].columns.push_back(
                {col, column_types[i].get<std::string>()});
        }

        for (const auto& t : db.tables) {
            if (t.columns.empty())
                throw FormatError(db.db_id + ": table " + t.name + " has no columns");
            std::set<std::string> seen_cols;
            for (const auto& c : t.columns) {
                if (!seen_cols.insert(to_lower(c.name)).second)
                    throw FormatError(db.db_id + ": duplicate column " + c.name + " in " + t.name);
            }
        }

        auto resolve = [&](int global_idx) -> std::pair<std::string, std::string> {
            if (global_idx < 0 || global_idx >= static_cast<int>(global_columns.size()) ||
                global_columns[global_idx].first < 0)
                throw FormatError(db.db_id + ": dangling column index " + std::to_string(global_idx));
            const auto& [tidx, col] = global_columns[global_idx];
            return {db.tables[tidx].name, col};
        };

        for (const auto& fk : entry.at("foreign_keys")) {
            if (!fk.is_array() || fk.size() != 2)
                throw FormatError(db.db_id + ": malformed foreign_keys entry");
            auto [from_t, from_c] = resolve(fk[0].get<int>());
            auto [to_t, to_c] = resolve(fk[1].get<int>());
            db.foreign_keys.push_back({from_t, from_c, to_t, to_c});
        }
        for (const auto& pk : entry.at("primary_keys")) {
            auto [t, c] = resolve(pk.get<int>());
            db.primary_keys.push_back({t, c});
        }

        catalog.databases.emplace(db.db_id, std::move(db));
    }
    return catalog;
}

CellSample sample_cells(const std::filesystem::path& db_file, const TableSchema& schema,
                        std::size_t n, std::uint64_t seed) {
    SqliteDb handle;
    if (sqlite3_open_v2(db_file.string().c_str(), &handle.db, SQLITE_OPEN_READONLY, nullptr) !=
        SQLITE_OK) {
        std::string msg = handle.db ? sqlite3_errmsg(handle.db) : "open failed";
        throw QueryError("cannot open " + db_file.string() + ": " + msg);
    }

    // Table existence check, case-insensitive like the engine itself.
    {
        SqliteStmt check;
        if (sqlite3_prepare_v2(handle.db,
                               "SELECT name FROM sqlite_master WHERE type='table' AND "
                               "lower(name)=lower(?1)",
                               -1, &check.stmt, nullptr) != SQLITE_OK)
            throw QueryError(sqlite3_errmsg(handle.db));
        sqlite3_bind_text(check.stmt, 1, schema.name.c_str(), -1, SQLITE_TRANSIENT);
        if (sqlite3_step(check.stmt) != SQLITE_ROW)
            throw TableMissing("table not in database file: " + schema.name);
    }

    std::string col_list;
    for (const auto& c : schema.columns) {
        if (!col_list.empty()) col_list += ",";
        col_list += quote_ident(c.name);
    }
    std::string table_q = quote_ident(schema.name);

    // Materialize all rows in table order, then pick n of them. Tables in
    // Spider-style benchmarks are small enough for this to be the simplest
    // correct route, and it works for WITHOUT ROWID tables too.
    std::vector<std::vector<std::string>> rows;
    {
        SqliteStmt sel;
        std::string sql = "SELECT " + col_list + " FROM " + table_q;
        if (sqlite3_prepare_v2(handle.db, sql.c_str(), -1, &sel.stmt, nullptr) != SQLITE_OK)
            throw QueryError(sqlite3_errmsg(handle.db));
        int rc;
        while ((rc = sqlite3_step(sel.stmt)) == SQLITE_ROW) {
            std::vector<std::string> row;
            row.reserve(schema.columns.size());
            for (std::size_t c = 0; c < schema.columns.size(); ++c)
                row.push_back(render_cell(sel.stmt, static_cast<int>(c)));
            rows.push_back(std::move(row));
        }
        if (rc != SQLITE_DONE) throw QueryError(sqlite3_errmsg(handle.db));
    }

    std::size_t take = std::min(n, rows.size());
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < take; ++i) {
        std::size_t j = i + static_cast<std::size_t>(bounded(gen, order.size() - i));
        std::swap(order[i], order[j]);
    }
    std::vector<std::size_t> picked(order.begin(), order.begin() + take);
    std::sort(picked.begin(), picked.end()); // keep original row order

    CellSample sample;
    sample.table = schema.name;
    sample.per_column_values.reserve(schema.columns.size());
    for (std::size_t c = 0; c < schema.columns.size(); ++c) {
        std::vector<std::string> values;
        values.reserve(take);
        for (std::size_t idx : picked) values.push_back(rows[idx][c]);
        sample.per_column_values.emplace_back(schema.columns[c].name, std::move(values));
    }
    return sample;
}

std::filesystem::path database_file(const std::filesystem::path& data_root,
                                    const std::string& db_id) {
    return data_root / "database" / db_id / (db_id + ".sqlite");
}

} // namespace petsql
