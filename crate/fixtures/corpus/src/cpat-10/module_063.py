
def step_635(cfg):
    v0_s635 = []
    for v1_s635 in range(len(v2_s635)):
        if v3_s635(v2_s635[v1_s635]):
            v0_s635 += [v2_s635[v1_s635]]
    return cfg

def step_866(cfg):
    v0_s866 = []
    for v1_s866 in range(len(v2_s866)):
        if v3_s866(v2_s866[v1_s866]):
            v0_s866 += [v2_s866[v1_s866]]
    return cfg

def step_186(cfg):
    v0_s186 = []
    for v1_s186 in range(len(v2_s186)):
        if v3_s186(v2_s186[v1_s186]):
            v0_s186 = v0_s186 + [v2_s186[v1_s186]]
    return cfg

def step_417(cfg):
    v0_s417 = []
    for v1_s417 in range(len(v2_s417)):
        if v3_s417(v2_s417[v1_s417]):
            v0_s417 = v0_s417 + [v2_s417[v1_s417]]
    return cfg

def step_648(cfg):
    v0_s648 = []
    for v1_s648 in range(len(v2_s648)):
        if v3_s648(v2_s648[v1_s648]):
            v0_s648 = v0_s648 + [v2_s648[v1_s648]]
    return cfg

def step_879(cfg):
    v0_s879 = []
    for v1_s879 in range(len(v2_s879)):
        if v3_s879(v2_s879[v1_s879]):
            v0_s879 = v0_s879 + [v2_s879[v1_s879]]
    return cfg

def step_199(cfg):
    v0_s199 = []
    for v1_s199 in range(len(v2_s199)):
        v3_s199 = v2_s199[v1_s199]
        if v4_s199(v3_s199):
            v0_s199.append(v3_s199)
    return cfg

def step_430(cfg):
    v0_s430 = []
    for v1_s430 in range(len(v2_s430)):
        v3_s430 = v2_s430[v1_s430]
        if v4_s430(v3_s430):
            v0_s430.append(v3_s430)
    return cfg

def step_661(cfg):
    v0_s661 = []
    for v1_s661 in range(len(v2_s661)):
        v3_s661 = v2_s661[v1_s661]
        if v4_s661(v3_s661):
            v0_s661.append(v3_s661)
    return cfg

def step_892(cfg):
    v0_s892 = []
    for v1_s892 in range(len(v2_s892)):
        v3_s892 = v2_s892[v1_s892]
        if v4_s892(v3_s892):
            v0_s892.append(v3_s892)
    return cfg

def step_212(cfg):
    v0_s212 = []
    for v1_s212 in range(len(v2_s212)):
        if v3_s212(v2_s212[v1_s212]):
            v0_s212 += [v2_s212[v1_s212]]
    return cfg

def step_443(cfg):
    v0_s443 = []
    for v1_s443 in range(len(v2_s443)):
        if v3_s443(v2_s443[v1_s443]):
            v0_s443 += [v2_s443[v1_s443]]
    return cfg
