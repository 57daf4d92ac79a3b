#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "rpart/oeis.hpp"

namespace rpart {

SequenceFixture fetch_bfile(std::string_view id, std::chrono::seconds timeout) {
  const std::string norm = normalize_oeis_id(id);
  const std::string path = "/" + norm + "/b" + norm.substr(1) + ".txt";

  httplib::Client client("https://oeis.org");
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_follow_location(true);
  auto response = client.Get(path);
  if (!response) {
    throw NetworkError("GET https://oeis.org" + path + " failed: " +
                       httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw HttpError(response->status, "GET https://oeis.org" + path + " returned HTTP " +
                                          std::to_string(response->status));
  }
  return parse_bfile(response->body, norm);
}

}  // namespace rpart
