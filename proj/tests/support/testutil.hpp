#ifndef HHV_TESTS_TESTUTIL_HPP
#define HHV_TESTS_TESTUTIL_HPP

#include <string>

namespace testutil {

// True when fn() throws E and the message contains `needle`.
template <typename E, typename Fn>
bool throws_containing(Fn&& fn, const char* needle) {
  try {
    fn();
  } catch (const E& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  } catch (...) {
    return false;
  }
  return false;
}

} // namespace testutil

#endif
