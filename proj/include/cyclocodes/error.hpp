#ifndef CYCLOCODES_ERROR_HPP
#define CYCLOCODES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cyclo {

enum class Errc {
    domain,            // argument outside the operation's mathematical domain
    size,              // parameter beyond the desk-scale caps (m <= 24 etc.)
    impossible_state,  // an internal identity failed; indicates a bug
    selection,         // invalid representative overrides
    search,            // randomized search could not make progress
    budget,            // exhaustive enumeration refused (dimension over budget)
    degenerate,        // the zero code, where distance is undefined
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::domain: return "domain error";
        case Errc::size: return "size error";
        case Errc::impossible_state: return "impossible state";
        case Errc::selection: return "selection error";
        case Errc::search: return "search error";
        case Errc::budget: return "budget error";
        case Errc::degenerate: return "degenerate code";
    }
    return "error";
}

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace cyclo

#endif  // CYCLOCODES_ERROR_HPP
