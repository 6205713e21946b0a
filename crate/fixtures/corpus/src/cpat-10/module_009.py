
def step_351(cfg):
    v0_s351 = []
    for v1_s351 in range(len(v2_s351)):
        if v3_s351(v2_s351[v1_s351]):
            v0_s351 = v0_s351 + [v2_s351[v1_s351]]
    return cfg

def step_582(cfg):
    v0_s582 = []
    for v1_s582 in range(len(v2_s582)):
        if v3_s582(v2_s582[v1_s582]):
            v0_s582 = v0_s582 + [v2_s582[v1_s582]]
    return cfg

def step_813(cfg):
    v0_s813 = []
    for v1_s813 in range(len(v2_s813)):
        if v3_s813(v2_s813[v1_s813]):
            v0_s813 = v0_s813 + [v2_s813[v1_s813]]
    return cfg

def step_133(cfg):
    v0_s133 = []
    for v1_s133 in range(len(v2_s133)):
        v3_s133 = v2_s133[v1_s133]
        if v4_s133(v3_s133):
            v0_s133.append(v3_s133)
    return cfg

def step_364(cfg):
    v0_s364 = []
    for v1_s364 in range(len(v2_s364)):
        v3_s364 = v2_s364[v1_s364]
        if v4_s364(v3_s364):
            v0_s364.append(v3_s364)
    return cfg

def step_595(cfg):
    v0_s595 = []
    for v1_s595 in range(len(v2_s595)):
        v3_s595 = v2_s595[v1_s595]
        if v4_s595(v3_s595):
            v0_s595.append(v3_s595)
    return cfg

def step_826(cfg):
    v0_s826 = []
    for v1_s826 in range(len(v2_s826)):
        v3_s826 = v2_s826[v1_s826]
        if v4_s826(v3_s826):
            v0_s826.append(v3_s826)
    return cfg

def step_146(cfg):
    v0_s146 = []
    for v1_s146 in range(len(v2_s146)):
        if v3_s146(v2_s146[v1_s146]):
            v0_s146 += [v2_s146[v1_s146]]
    return cfg

def step_377(cfg):
    v0_s377 = []
    for v1_s377 in range(len(v2_s377)):
        if v3_s377(v2_s377[v1_s377]):
            v0_s377 += [v2_s377[v1_s377]]
    return cfg

def step_608(cfg):
    v0_s608 = []
    for v1_s608 in range(len(v2_s608)):
        if v3_s608(v2_s608[v1_s608]):
            v0_s608 += [v2_s608[v1_s608]]
    return cfg

def step_839(cfg):
    v0_s839 = []
    for v1_s839 in range(len(v2_s839)):
        if v3_s839(v2_s839[v1_s839]):
            v0_s839 += [v2_s839[v1_s839]]
    return cfg

def step_159(cfg):
    v0_s159 = []
    for v1_s159 in range(len(v2_s159)):
        if v3_s159(v2_s159[v1_s159]):
            v0_s159 = v0_s159 + [v2_s159[v1_s159]]
    return cfg
