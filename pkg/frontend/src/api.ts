import {
  ClassifyResponse,
  Convention,
  MoveRejected,
  MoveResponse,
  MoveSpec,
  Position,
} from './types.js';

/** Non-2xx response other than a move rejection. */
export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

/** 409 from POST /api/move: the move was understood but is not legal. */
export class MoveRejectedError extends Error {
  constructor(public readonly reason: string) {
    super(reason);
    this.name = 'MoveRejectedError';
  }
}

/**
 * Thin typed client for the JSON endpoints. The server is stateless, so the
 * client carries the position on every call; baseUrl is '' when the bundle
 * is served by the engine itself and an origin for dev setups.
 */
export class ApiClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  async health(): Promise<boolean> {
    try {
      const res = await this.fetchFn(`${this.baseUrl}/api/health`);
      return res.ok;
    } catch {
      return false;
    }
  }

  async classify(position: Position, convention: Convention): Promise<ClassifyResponse> {
    const [x, y, z] = position;
    const query = `x=${x}&y=${y}&z=${z}&convention=${convention}`;
    const res = await this.fetchFn(`${this.baseUrl}/api/classify?${query}`);
    if (!res.ok) {
      throw new ApiError(res.status, await errorText(res));
    }
    return (await res.json()) as ClassifyResponse;
  }

  async move(position: Position, move: MoveSpec, convention: Convention): Promise<MoveResponse> {
    const res = await this.fetchFn(`${this.baseUrl}/api/move`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ position, move, convention }),
    });
    if (res.status === 409) {
      const body = (await res.json()) as MoveRejected;
      throw new MoveRejectedError(body.reason);
    }
    if (!res.ok) {
      throw new ApiError(res.status, await errorText(res));
    }
    return (await res.json()) as MoveResponse;
  }

  async grundy(position: Position): Promise<number> {
    const [x, y, z] = position;
    const res = await this.fetchFn(`${this.baseUrl}/api/grundy?x=${x}&y=${y}&z=${z}`);
    if (!res.ok) {
      throw new ApiError(res.status, await errorText(res));
    }
    const body = (await res.json()) as { grundy: number };
    return body.grundy;
  }
}

async function errorText(res: Response): Promise<string> {
  try {
    const body = (await res.json()) as { error?: string };
    if (body && typeof body.error === 'string') {
      return body.error;
    }
  } catch {
    // fall through to the generic message
  }
  return `request failed with status ${res.status}`;
}
