#ifndef TDHO_WARNINGS_HPP
#define TDHO_WARNINGS_HPP

#include <string>
#include <vector>

namespace tdho {

// Thread-local accuracy-warning sink.  Numerical routines push notes
// (boundary contamination, finite-difference cancellation); callers drain
// them into reports.  Never fatal.
void push_warning(std::string message);
std::vector<std::string> drain_warnings();

} // namespace tdho

#endif
