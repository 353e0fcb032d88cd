// Copyright 2026 The koin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "koin/rewriter.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "json_util.hpp"
#include "koin/errors.hpp"
#include "koin/transforms.hpp"
#include "parallel.hpp"

namespace koin {

namespace {

using nlohmann::json;

constexpr std::string_view kPlaceholder = "{DATA}";

std::size_t count_placeholders(std::string_view text) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(kPlaceholder, pos)) != std::string_view::npos) {
    ++count;
    pos += kPlaceholder.size();
  }
  return count;
}

// endpoint -> (scheme://host[:port], /path)
std::pair<std::string, std::string> split_endpoint(const std::string& url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos ||
      (url.substr(0, scheme_end) != "http" &&
       url.substr(0, scheme_end) != "https")) {
    throw ConfigError("endpoint must start with http:// or https://: " + url);
  }
  const std::size_t path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

void validate_rewriter_config(const RewriterConfig& config) {
  const std::size_t placeholders = count_placeholders(config.prompt_template);
  if (placeholders != 1) {
    throw ConfigError("prompt template must contain exactly one {DATA}, has " +
                      std::to_string(placeholders));
  }
  if (config.max_retries < 0) throw ConfigError("max_retries must be >= 0");
  if (!(config.timeout_seconds > 0.0)) {
    throw ConfigError("timeout_seconds must be positive");
  }
  if (config.max_in_flight < 1) {
    throw ConfigError("max_in_flight must be >= 1");
  }
}

RewriterConfig rewriter_config_from_json(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad rewriter config JSON: ") + e.what());
  }
  if (!obj.is_object()) throw ParseError("rewriter config is not an object");

  RewriterConfig config;
  if (obj.contains("endpoint")) config.endpoint = obj["endpoint"];
  if (obj.contains("model")) config.model = obj["model"];
  if (obj.contains("auth_env")) config.auth_env = obj["auth_env"];
  if (obj.contains("timeout_seconds")) {
    config.timeout_seconds = obj["timeout_seconds"];
  }
  if (obj.contains("max_retries")) config.max_retries = obj["max_retries"];
  if (obj.contains("prompt_template")) {
    config.prompt_template = obj["prompt_template"];
  }
  if (obj.contains("rule_fallback")) config.rule_fallback = obj["rule_fallback"];
  if (obj.contains("max_in_flight")) config.max_in_flight = obj["max_in_flight"];
  validate_rewriter_config(config);
  return config;
}

RewriterConfig rewriter_config_from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rewriter config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return rewriter_config_from_json(buf.str());
}

std::string fill_prompt(const std::string& prompt_template,
                        const std::string& data) {
  const std::size_t pos = prompt_template.find(kPlaceholder);
  if (pos == std::string::npos) {
    throw ConfigError("prompt template has no {DATA} placeholder");
  }
  std::string out = prompt_template;
  out.replace(pos, kPlaceholder.size(), data);
  return out;
}

std::string_view rewrite_status_name(RewriteStatus status) {
  switch (status) {
    case RewriteStatus::kAccepted:
      return "accepted";
    case RewriteStatus::kRejectedWordMismatch:
      return "rejected_word_mismatch";
    case RewriteStatus::kFallbackUsed:
      return "fallback_used";
    case RewriteStatus::kTransportFailed:
      return "transport_failed";
  }
  return "unknown";
}

bool validate_retention(const Sentence& input, const Sentence& output) {
  if (input.eojeols.size() != output.eojeols.size()) return false;
  std::vector<std::string> a = input.eojeols;
  std::vector<std::string> b = output.eojeols;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

HttpChatClient::HttpChatClient(RewriterConfig config)
    : config_(std::move(config)) {
  validate_rewriter_config(config_);
  if (config_.endpoint.empty()) {
    throw ConfigError("http chat client needs an endpoint");
  }
  split_endpoint(config_.endpoint);  // fail fast on malformed URLs
}

std::string HttpChatClient::send(const std::string& prompt) {
  const auto [base, path] = split_endpoint(config_.endpoint);
  httplib::Client client(base);
  const auto timeout = std::chrono::milliseconds(
      static_cast<long long>(config_.timeout_seconds * 1000.0));
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);

  httplib::Headers headers;
  if (!config_.auth_env.empty()) {
    if (const char* token = std::getenv(config_.auth_env.c_str());
        token != nullptr && token[0] != '\0') {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
  }

  const json body = {
      {"model", config_.model},
      {"messages", json::array({json{{"role", "user"}, {"content", prompt}}})},
  };
  const httplib::Result result =
      client.Post(path, headers, body.dump(), "application/json");
  if (!result) {
    throw TransportError("request failed: " + httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw TransportError("endpoint returned HTTP " +
                         std::to_string(result->status));
  }
  json reply;
  try {
    reply = json::parse(result->body);
  } catch (const json::parse_error& e) {
    throw TransportError(std::string("bad reply JSON: ") + e.what());
  }
  try {
    return reply.at("choices").at(0).at("message").at("content")
        .get<std::string>();
  } catch (const json::exception&) {
    throw TransportError("reply has no choices[0].message.content");
  }
}

ReplayChatClient ReplayChatClient::from_jsonl(std::string_view text) {
  ReplayChatClient client;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError("replay fixture line " + std::to_string(line_no) +
                       ": " + e.what());
    }
    const std::string input = detail::require_string(obj, "input");
    const std::string reply = detail::require_string(obj, "reply");
    client.replies_[input].push_back(reply);
  }
  return client;
}

ReplayChatClient ReplayChatClient::from_jsonl_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open replay fixture: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_jsonl(buf.str());
}

std::string ReplayChatClient::send(const std::string& prompt) {
  std::lock_guard<std::mutex> lock(mutex_);
  // Longest matching input wins, so short sentences never shadow longer
  // ones that contain them.
  std::map<std::string, std::deque<std::string>>::iterator best =
      replies_.end();
  for (auto it = replies_.begin(); it != replies_.end(); ++it) {
    if (prompt.find(it->first) == std::string::npos) continue;
    if (best == replies_.end() ||
        it->first.size() > best->first.size()) {
      best = it;
    }
  }
  if (best == replies_.end()) {
    throw TransportError("no canned reply matches the prompt");
  }
  std::deque<std::string>& queue = best->second;
  const std::string reply = queue.front();
  if (queue.size() > 1) queue.pop_front();
  return reply;
}

RewriteOutcome rewrite_order(const Sentence& sentence,
                             const RewriterConfig& config, ChatClient& client,
                             std::uint64_t fallback_seed) {
  validate_rewriter_config(config);
  const std::string prompt =
      fill_prompt(config.prompt_template, render_sentence(sentence));

  RewriteOutcome outcome;
  bool last_attempt_was_transport = false;
  for (int attempt = 0; attempt <= config.max_retries; ++attempt) {
    ++outcome.attempts;
    std::string reply;
    try {
      reply = client.send(prompt);
    } catch (const TransportError&) {
      last_attempt_was_transport = true;
      continue;
    }
    last_attempt_was_transport = false;
    Sentence candidate = parse_sentence(reply);
    if (!validate_retention(sentence, candidate)) continue;
    // The reorder never touches sentence-final punctuation, so the
    // input's terminator is restored regardless of the reply's.
    candidate.terminal_punct = sentence.terminal_punct;
    outcome.status = RewriteStatus::kAccepted;
    outcome.unchanged = candidate.eojeols == sentence.eojeols;
    outcome.needs_human_review = !outcome.unchanged;
    outcome.output = std::move(candidate);
    return outcome;
  }

  if (last_attempt_was_transport) {
    outcome.status = RewriteStatus::kTransportFailed;
    outcome.output = shuf_sem_presrv(sentence, fallback_seed);
  } else if (config.rule_fallback) {
    outcome.status = RewriteStatus::kFallbackUsed;
    outcome.output = shuf_sem_presrv(sentence, fallback_seed);
  } else {
    outcome.status = RewriteStatus::kRejectedWordMismatch;
    outcome.output = sentence;
    outcome.needs_human_review = true;
  }
  return outcome;
}

std::vector<RewriteOutcome> rewrite_batch(
    const std::vector<Sentence>& sentences, const RewriterConfig& config,
    ChatClient& client, const std::vector<std::uint64_t>& fallback_seeds) {
  validate_rewriter_config(config);
  if (sentences.size() != fallback_seeds.size()) {
    throw BadParamsError("rewrite_batch needs one fallback seed per sentence");
  }
  std::vector<RewriteOutcome> outcomes(sentences.size());
  detail::run_parallel(sentences.size(), config.max_in_flight,
                       [&](std::size_t i) {
                         outcomes[i] = rewrite_order(sentences[i], config,
                                                     client,
                                                     fallback_seeds[i]);
                       });
  return outcomes;
}

}  // namespace koin
