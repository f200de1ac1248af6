#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "msection/rational.hpp"

namespace msection::oeis {

/// Terms of one OEIS sequence. `offset` is the index of terms[0].
struct Fixture {
    std::string a_number;
    long offset = 0;
    std::vector<Int> terms;
    std::string provenance;  // "bundled:<path>", "cached:<path>" or "fetched"

    /// a(n), by absolute sequence index.
    const Int& at(long n) const {
        const long i = n - offset;
        if (i < 0 || i >= static_cast<long>(terms.size()))
            throw std::out_of_range("Fixture: index " + std::to_string(n) + " outside " +
                                    a_number + " data");
        return terms[static_cast<std::size_t>(i)];
    }
};

struct FixtureUnavailable : std::runtime_error {
    explicit FixtureUnavailable(const std::string& what) : std::runtime_error(what) {}
};

/// Parses b-file style content: one "n a(n)" pair per line, or one bare
/// integer per line; '#' starts a comment. Returns (first index, terms).
/// Bare-integer files are indexed from 0. Indices must be consecutive.
std::pair<long, std::vector<Int>> parse_bfile(std::istream& in);

struct LoadOptions {
    bool allow_fetch = false;        // network is opt-in
    std::string dir_override;       // highest-priority fixture directory
    std::string cache_dir_override; // overrides MSECTION_OEIS_CACHE
};

/// Canonicalizes identifiers like "a14445" or "A014445" to "A014445".
std::string normalize_a_number(const std::string& a_number);

/// Loads a fixture, searching: dir_override, $MSECTION_OEIS_DIR, the
/// bundled data directory, the install data directory, then the cache
/// directory. With allow_fetch, a miss falls through to a download from
/// oeis.org which is stored in the cache directory. Throws
/// FixtureUnavailable when nothing is found.
Fixture load(const std::string& a_number, const LoadOptions& options = {});

}  // namespace msection::oeis
