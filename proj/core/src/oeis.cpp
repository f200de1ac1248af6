#include "msection/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#if defined(MSECTION_HAVE_OPENSSL)
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

namespace msection::oeis {

namespace fs = std::filesystem;

std::string normalize_a_number(const std::string& a_number) {
    std::string digits;
    for (char c : a_number) {
        if (c == 'A' || c == 'a') {
            if (!digits.empty()) throw std::invalid_argument("bad A-number: " + a_number);
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad A-number: " + a_number);
        digits += c;
    }
    if (digits.empty() || digits.size() > 9)
        throw std::invalid_argument("bad A-number: " + a_number);
    while (digits.size() < 6) digits.insert(digits.begin(), '0');
    return "A" + digits;
}

std::pair<long, std::vector<Int>> parse_bfile(std::istream& in) {
    std::vector<Int> terms;
    long offset = 0;
    bool first = true, indexed = false;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok_a, tok_b;
        if (!(ls >> tok_a)) continue;  // blank line
        const bool has_second = static_cast<bool>(ls >> tok_b);
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("b-file: more than two columns");

        if (first) {
            indexed = has_second;
            first = false;
        } else if (indexed != has_second) {
            throw std::invalid_argument("b-file: mixed one- and two-column lines");
        }

        if (indexed) {
            const long idx = std::stol(tok_a);
            if (terms.empty())
                offset = idx;
            else if (idx != offset + static_cast<long>(terms.size()))
                throw std::invalid_argument("b-file: non-consecutive index " + tok_a);
            terms.emplace_back(tok_b);
        } else {
            terms.emplace_back(tok_a);
        }
    }
    if (terms.empty()) throw std::invalid_argument("b-file: no terms");
    return {offset, terms};
}

namespace {

std::string env_or_empty(const char* name) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : std::string();
}

std::string bfile_name(const std::string& canonical) {
    return "b" + canonical.substr(1) + ".txt";
}

bool try_load_file(const fs::path& path, Fixture& out, const std::string& tag) {
    std::ifstream in(path);
    if (!in) return false;
    auto [offset, terms] = parse_bfile(in);
    out.offset = offset;
    out.terms = std::move(terms);
    out.provenance = tag + ":" + path.string();
    return true;
}

std::string fetch_bfile_text(const std::string& canonical) {
#if defined(MSECTION_HAVE_OPENSSL)
    httplib::SSLClient client("oeis.org");
    client.set_follow_location(true);
    const auto res = client.Get(("/" + canonical + "/" + bfile_name(canonical)).c_str());
    if (!res || res->status != 200)
        throw FixtureUnavailable("fetch failed for " + canonical +
                                 (res ? " (http " + std::to_string(res->status) + ")" : ""));
    return res->body;
#else
    throw FixtureUnavailable("fetch support not built for " + canonical);
#endif
}

}  // namespace

Fixture load(const std::string& a_number, const LoadOptions& options) {
    Fixture out;
    out.a_number = normalize_a_number(a_number);
    const std::string fname = bfile_name(out.a_number);

    std::vector<std::pair<std::string, std::string>> search;  // (dir, tag)
    if (!options.dir_override.empty()) search.emplace_back(options.dir_override, "bundled");
    if (auto dir = env_or_empty("MSECTION_OEIS_DIR"); !dir.empty())
        search.emplace_back(dir, "bundled");
#ifdef MSECTION_SOURCE_OEIS_DIR
    search.emplace_back(MSECTION_SOURCE_OEIS_DIR, "bundled");
#endif
#ifdef MSECTION_INSTALL_OEIS_DIR
    search.emplace_back(MSECTION_INSTALL_OEIS_DIR, "bundled");
#endif
    std::string cache_dir = options.cache_dir_override;
    if (cache_dir.empty()) cache_dir = env_or_empty("MSECTION_OEIS_CACHE");
    if (!cache_dir.empty()) search.emplace_back(cache_dir, "cached");

    for (const auto& [dir, tag] : search)
        if (try_load_file(fs::path(dir) / fname, out, tag)) return out;

    if (!options.allow_fetch)
        throw FixtureUnavailable("fixture unavailable: " + out.a_number +
                                 " (offline; no bundled or cached data)");

    const std::string body = fetch_bfile_text(out.a_number);
    std::istringstream in(body);
    auto [offset, terms] = parse_bfile(in);
    out.offset = offset;
    out.terms = std::move(terms);
    out.provenance = "fetched";

    if (!cache_dir.empty()) {
        std::error_code ec;
        fs::create_directories(cache_dir, ec);
        if (!ec) {
            std::ofstream cache_file(fs::path(cache_dir) / fname);
            cache_file << body;
            out.provenance = "cached:" + (fs::path(cache_dir) / fname).string();
        }
    }
    return out;
}

}  // namespace msection::oeis
