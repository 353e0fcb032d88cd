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

#ifndef KOIN_REWRITER_HPP_
#define KOIN_REWRITER_HPP_

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "koin/sentence.hpp"

namespace koin {

// Reorder instruction sent to the chat endpoint. {DATA} is replaced by
// the rendered sentence.
inline constexpr const char* kDefaultPromptTemplate =
    "Please change the word order of the following Input sentence without "
    "altering its meaning.\n"
    "Each word in the sentence be maintained as is.\n"
    "\n"
    "Provide a short answer.\n"
    "\n"
    "Input sentence: {DATA}\n"
    "\n"
    "What is the altered sentence?";

struct RewriterConfig {
  std::string endpoint;  // e.g. https://host/v1/chat/completions
  std::string model;
  std::string auth_env = "KOIN_API_TOKEN";  // env var holding the token
  double timeout_seconds = 30.0;
  int max_retries = 1;
  std::string prompt_template = kDefaultPromptTemplate;
  // When validation keeps failing, fall back to the rule-based reorder
  // instead of returning the input unchanged.
  bool rule_fallback = true;
  unsigned max_in_flight = 4;
};

// Throws ConfigError: the template must contain exactly one {DATA},
// max_retries must be >= 0, timeout and max_in_flight positive.
void validate_rewriter_config(const RewriterConfig& config);

// JSON object with the RewriterConfig field names; absent fields keep
// their defaults. Throws ParseError / ConfigError.
RewriterConfig rewriter_config_from_json(std::string_view text);
RewriterConfig rewriter_config_from_file(const std::string& path);

std::string fill_prompt(const std::string& prompt_template,
                        const std::string& data);

enum class RewriteStatus {
  kAccepted,
  kRejectedWordMismatch,
  kFallbackUsed,
  kTransportFailed,
};

std::string_view rewrite_status_name(RewriteStatus status);

struct RewriteOutcome {
  RewriteStatus status = RewriteStatus::kRejectedWordMismatch;
  Sentence output;
  int attempts = 0;
  bool unchanged = false;  // accepted reply was the identity permutation
  // Word retention is checked mechanically; whether the meaning survived
  // is not, so accepted reorderings stay flagged for a human pass.
  bool needs_human_review = false;
};

// True iff the eojeol multisets match; terminal punctuation is already
// detached from both sides and is not compared.
bool validate_retention(const Sentence& input, const Sentence& output);

// Transport for one prompt/reply exchange. Implementations must be safe
// for concurrent send() calls.
class ChatClient {
 public:
  virtual ~ChatClient() = default;
  // Returns the assistant reply text. Throws TransportError.
  virtual std::string send(const std::string& prompt) = 0;
};

// POSTs {"model", "messages":[{"role":"user","content"}]} to the
// configured endpoint and reads choices[0].message.content. A token in
// the configured environment variable is sent as a bearer credential.
class HttpChatClient : public ChatClient {
 public:
  explicit HttpChatClient(RewriterConfig config);
  std::string send(const std::string& prompt) override;

 private:
  RewriterConfig config_;
};

// Serves canned replies from {"input", "reply"} JSONL so tests never
// touch the network. A prompt matches the longest fixture input it
// contains; repeated entries for one input are served in file order,
// with the last entry repeating once the queue drains.
class ReplayChatClient : public ChatClient {
 public:
  static ReplayChatClient from_jsonl(std::string_view text);
  static ReplayChatClient from_jsonl_file(const std::string& path);

  // Movable despite the mutex; the moved-to client gets a fresh lock.
  ReplayChatClient(ReplayChatClient&& other) noexcept
      : replies_(std::move(other.replies_)) {}
  ReplayChatClient& operator=(ReplayChatClient&& other) noexcept {
    replies_ = std::move(other.replies_);
    return *this;
  }

  std::string send(const std::string& prompt) override;

 private:
  ReplayChatClient() = default;

  std::mutex mutex_;
  std::map<std::string, std::deque<std::string>> replies_;
};

// Prompts for a reorder of `sentence` and validates word retention.
// Validation or transport failures retry up to config.max_retries; after
// that the outcome falls back to the rule-based reorder seeded with
// `fallback_seed` (or, with rule_fallback off, returns the input as
// rejected). Never returns an unvalidated sentence as accepted and never
// throws on transport failure.
RewriteOutcome rewrite_order(const Sentence& sentence,
                             const RewriterConfig& config, ChatClient& client,
                             std::uint64_t fallback_seed);

// rewrite_order over a batch with at most config.max_in_flight requests
// running at once. outcomes[i] corresponds to sentences[i].
std::vector<RewriteOutcome> rewrite_batch(
    const std::vector<Sentence>& sentences, const RewriterConfig& config,
    ChatClient& client, const std::vector<std::uint64_t>& fallback_seeds);

}  // namespace koin

#endif  // KOIN_REWRITER_HPP_
