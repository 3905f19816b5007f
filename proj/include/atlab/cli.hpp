#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atlab::cli {

// Exit codes: 0 success or verdict true, 1 verdict false (or hypotheses of a
// requested reduction unmet), 2 usage or malformed input, 3 budget exceeded,
// 4 invariant violation or falsification event.  Output depends only on the
// arguments and input stream, never on --jobs.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in);
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace atlab::cli
