"""# stratagem.pipeline.provider

Language-model provider clients.

One HTTP adapter speaks a chat-completions style JSON interface (`POST {base_url}/chat/completions`)
and serves any endpoint that implements it; a mock provider replays canned responses from a
directory (`NN.txt` is a response body, `NN.error` a transport failure) for offline runs and tests.
Every request is independent: no conversation state is kept between requests, and no sampling
parameter is overridden.
"""

__all__ =   [
                "HttpProvider",
                "load_provider_config",
                "MockProvider",
                "parse_provider",
                "Provider",
                "ProviderConfig",
                "ProviderResponse",
                "request_candidates"
            ]

from abc                            import ABC, abstractmethod
from concurrent.futures             import as_completed, Future, ThreadPoolExecutor
from dataclasses                    import dataclass, fields
from datetime                       import datetime, timezone
from json                           import JSONDecodeError, loads
from logging                        import Logger
from os                             import environ
from pathlib                        import Path
from time                           import sleep
from typing                         import Dict, List, Optional, override, Union

from requests                       import RequestException, Response, Session
from tqdm                           import tqdm

from stratagem.pipeline.exceptions  import ProviderConfigError, TransportError
from stratagem.utilities            import get_child

@dataclass(frozen = True)
class ProviderConfig():
    r"""# :class:`ProviderConfig`

    ## Properties:
    * :param:`base_url`     (str):      Endpoint root; requests go to `{base_url}/chat/completions`.
    * :param:`model`        (str):      Model name sent with every request and recorded in candidate
                                        ids.
    * :param:`api_key_env`  (str):      Name of the environment variable holding the API key.
    * :param:`max_tokens`   (int):      Response token cap. Defaults to 16,384.
    * :param:`in_flight`    (int):      Maximum concurrent requests. Defaults to 1.
    * :param:`retries`      (int):      Retries after a transport failure. Defaults to 2.
    * :param:`backoff`      (float):    Seconds before the first retry; doubled for each further
                                        retry. Defaults to 2.
    * :param:`timeout`      (float):    Seconds allowed per request. Defaults to 600.
    """
    base_url:       str
    model:          str
    api_key_env:    str
    max_tokens:     int =   16384
    in_flight:      int =   1
    retries:        int =   2
    backoff:        float = 2.0
    timeout:        float = 600.0

    def __post_init__(self) -> None:
        """# Validate Configuration."""
        if self.max_tokens < 1:     raise ProviderConfigError(self.model, "max_tokens must be positive")
        if self.in_flight < 1:      raise ProviderConfigError(self.model, "in_flight must be positive")
        if not 0 <= self.retries <= 2:
            raise ProviderConfigError(self.model, "retries must be between 0 and 2")
        if self.backoff < 0:        raise ProviderConfigError(self.model, "backoff must be non-negative")


@dataclass(frozen = True)
class ProviderResponse():
    r"""# :class:`ProviderResponse`

    ## Properties:
    * :param:`ordinal`      (int):  Request ordinal, 0..N-1.
    * :param:`text`         (str):  Response body verbatim, None on transport failure.
    * :param:`error`        (str):  Transport diagnostic, None on success.
    * :param:`requested`    (str):  ISO-8601 UTC time the first attempt was sent.
    * :param:`received`     (str):  ISO-8601 UTC time the last attempt ended.
    * :param:`attempts`     (int):  Attempts made.
    """
    ordinal:    int
    text:       Optional[str]
    error:      Optional[str]
    requested:  str
    received:   str
    attempts:   int =   1

    @property
    def failed(self) -> bool:
        """# Request Ended in a Transport Failure?"""
        return self.text is None


class Provider(ABC):
    """# Abstract Provider.

    Owns the retry loop: transport failures are retried with exponential backoff up to the
    configured budget; any response body, however bad, is returned as is.
    """

    def __init__(self,
        config: ProviderConfig
    ):
        """# Instantiate Provider.

        ## Args:
            * config    (ProviderConfig):   Provider configuration.
        """
        # Initialize logger.
        self.__logger__:    Logger =            get_child("provider")

        # Define properties.
        self._config_:      ProviderConfig =    config

    # PROPERTIES ===================================================================================

    @property
    def config(self) -> ProviderConfig:
        """# Provider Configuration."""
        return self._config_

    # METHODS ======================================================================================

    def request(self,
        prompt:     str,
        ordinal:    int
    ) -> ProviderResponse:
        """# Request One Response.

        ## Args:
            * prompt    (str):  Prompt text.
            * ordinal   (int):  Request ordinal.

        ## Returns:
            * ProviderResponse: Body or transport diagnostic, with timestamps.
        """
        # Stamp start.
        requested:  str =   _now_()

        # Attempt with retries.
        for attempt in range(self._config_.retries + 1):

            try:# Send request.
                text:   str =   self._send_(prompt = prompt, ordinal = ordinal)

                # Provide body.
                return ProviderResponse(ordinal, text, None, requested, _now_(), attempt + 1)

            # Transport failures only.
            except TransportError as e:

                # Out of retries.
                if attempt == self._config_.retries:
                    self.__logger__.error(f"Request {ordinal} failed after {attempt + 1} attempt(s): {e}")
                    return ProviderResponse(ordinal, None, str(e), requested, _now_(), attempt + 1)

                # Back off.
                wait:   float = self._config_.backoff * 2 ** attempt
                self.__logger__.warning(f"Request {ordinal} attempt {attempt + 1} failed ({e}); retrying in {wait:.1f}s")
                sleep(wait)

    # HELPERS ======================================================================================

    @abstractmethod
    def _send_(self,
        prompt:     str,
        ordinal:    int
    ) -> str:
        """# Send One Request.

        ## Raises:
            * TransportError:   If no response body was obtained.

        ## Returns:
            * str:  Response body.
        """
        pass


class HttpProvider(Provider):
    """# HTTP Provider.

    Chat-completions style JSON client over a :class:`requests.Session`.
    """

    def __init__(self,
        config:     ProviderConfig,
        session:    Optional[Session] = None
    ):
        """# Instantiate HTTP Provider.

        ## Args:
            * config    (ProviderConfig):   Provider configuration.
            * session   (Session):          HTTP session. Defaults to a new one.

        ## Raises:
            * ProviderConfigError:  If the API key variable is unset.
        """
        # Initialize provider.
        super(HttpProvider, self).__init__(config = config)

        # The key only ever comes from the environment.
        if not environ.get(config.api_key_env):
            raise ProviderConfigError(config.model, f"environment variable {config.api_key_env} is not set")

        # Define properties.
        self._session_:     Session =   session or Session()
        self._url_:         str =       f"{config.base_url.rstrip('/')}/chat/completions"
        self._headers_:     Dict =      {
                                            "Authorization":    f"Bearer {environ[config.api_key_env]}",
                                            "Content-Type":     "application/json",
                                        }

        # Debug initialization.
        self.__logger__.debug(f"HTTP provider for {config.model} at {self._url_}")

    @override
    def _send_(self,
        prompt:     str,
        ordinal:    int
    ) -> str:
        """# POST One Chat Completion."""
        try:# Send request.
            response:   Response =  self._session_.post(
                                        self._url_,
                                        headers =   self._headers_,
                                        json =      {
                                                        "model":        self._config_.model,
                                                        "messages":     [{"role": "user", "content": prompt}],
                                                        "max_tokens":   self._config_.max_tokens,
                                                    },
                                        timeout =   self._config_.timeout
                                    )

        # Connection-level failures.
        except RequestException as e:   raise TransportError(f"{type(e).__name__}: {e}") from e

        # Non-2xx statuses.
        if not 200 <= response.status_code < 300:
            raise TransportError(response.text[:200] or response.reason or "no body", response.status_code)

        try:# Unwrap envelope.
            return response.json()["choices"][0]["message"]["content"]

        # Malformed envelope.
        except (ValueError, KeyError, IndexError, TypeError) as e:
            raise TransportError(f"malformed response envelope ({type(e).__name__})", response.status_code) from e


class MockProvider(Provider):
    """# Mock Provider.

    Replays `NN.txt` bodies and `NN.error` failures from a directory in ordinal order, cycling when
    more requests are made than files exist.
    """

    def __init__(self,
        directory:  Union[str, Path],
        retries:    int =               0
    ):
        """# Instantiate Mock Provider.

        ## Args:
            * directory (str | Path):   Directory of canned responses.
            * retries   (int):          Retries after a canned failure. Defaults to 0.

        ## Raises:
            * ProviderConfigError:  If the directory holds no canned responses.
        """
        # Initialize provider.
        super(MockProvider, self).__init__(
            config =    ProviderConfig(
                            base_url =      f"mock:{directory}",
                            model =         "mock",
                            api_key_env =   "",
                            retries =       retries,
                            backoff =       0.0
                        )
        )

        # Collect canned responses in ordinal order.
        self._files_:   List[Path] =    sorted(
                                            (path for path in Path(directory).glob("*") if path.suffix in (".txt", ".error")),
                                            key = lambda path: (int(path.stem) if path.stem.isdigit() else 1 << 30, path.name)
                                        )

        if not self._files_: raise ProviderConfigError(str(directory), "no canned responses (NN.txt / NN.error)")

        # Debug initialization.
        self.__logger__.debug(f"Mock provider replaying {len(self._files_)} response(s) from {directory}")

    @override
    def _send_(self,
        prompt:     str,
        ordinal:    int
    ) -> str:
        """# Replay Canned Response."""
        # Select file.
        path:   Path =  self._files_[ordinal % len(self._files_)]

        # Canned failure.
        if path.suffix == ".error": raise TransportError(path.read_text(encoding = "utf-8").strip() or "canned failure", 503)

        # Canned body.
        return path.read_text(encoding = "utf-8")


def load_provider_config(
    path:   Union[str, Path]
) -> ProviderConfig:
    """# Load Provider Configuration.

    ## Args:
        * path  (str | Path):   JSON file `{"base_url", "model", "api_key_env", "max_tokens",
                                "in_flight", ...}`.

    ## Raises:
        * ProviderConfigError:  If the file is unreadable or misses required keys.

    ## Returns:
        * ProviderConfig:   Loaded configuration.
    """
    try:# Read document.
        document:   dict =  loads(Path(path).read_text(encoding = "utf-8"))

    # Relay decoding failures.
    except (OSError, JSONDecodeError) as e: raise ProviderConfigError(str(path), f"cannot read ({e})") from e

    # Check keys.
    known:      set =   {field.name for field in fields(ProviderConfig)}
    missing:    list =  [key for key in ("base_url", "model", "api_key_env") if key not in document]

    if missing:                         raise ProviderConfigError(str(path), f"missing {', '.join(missing)}")
    if set(document) - known:           raise ProviderConfigError(str(path), f"unknown {', '.join(sorted(set(document) - known))}")

    # Provide configuration.
    return ProviderConfig(**document)

def parse_provider(
    specification:  str
) -> Provider:
    """# Parse Provider Specification.

    ## Args:
        * specification (str):  `mock:<dir>` or the path of a provider configuration file.

    ## Returns:
        * Provider: Ready provider.
    """
    # Mock replay.
    if specification.startswith("mock:"): return MockProvider(specification[len("mock:"):])

    # HTTP endpoint.
    return HttpProvider(load_provider_config(specification))

def request_candidates(
    prompt:     str,
    provider:   Provider,
    n:          int
) -> List[ProviderResponse]:
    """# Request Candidates.

    Issues `n` independent requests, at most `in_flight` at a time.

    ## Args:
        * prompt    (str):      Prompt text, identical for every request.
        * provider  (Provider): Provider.
        * n         (int):      Number of requests.

    ## Returns:
        * List[ProviderResponse]:   One response per ordinal, in ordinal order.
    """
    # Collect responses.
    responses:  List[ProviderResponse] =    []

    with ThreadPoolExecutor(max_workers = provider.config.in_flight) as executor:

        # Submit every request.
        futures:    List[Future] =  [executor.submit(provider.request, prompt, ordinal) for ordinal in range(n)]

        # Gather as they complete.
        for future in tqdm(as_completed(futures), total = n, desc = "Requesting candidates", unit = "candidate"):
            responses.append(future.result())

    # Ordinal order.
    return sorted(responses, key = lambda response: response.ordinal)

# HELPERS ==========================================================================================

def _now_() -> str:
    """# Current UTC Time, ISO-8601."""
    return datetime.now(timezone.utc).isoformat(timespec = "milliseconds")
