
def step_401(cfg):
    v0_s401 = []
    for v1_s401 in range(len(v2_s401)):
        if v3_s401(v2_s401[v1_s401]):
            v0_s401 += [v2_s401[v1_s401]]
    return cfg

def step_632(cfg):
    v0_s632 = []
    for v1_s632 in range(len(v2_s632)):
        if v3_s632(v2_s632[v1_s632]):
            v0_s632 += [v2_s632[v1_s632]]
    return cfg

def step_863(cfg):
    v0_s863 = []
    for v1_s863 in range(len(v2_s863)):
        if v3_s863(v2_s863[v1_s863]):
            v0_s863 += [v2_s863[v1_s863]]
    return cfg

def step_183(cfg):
    v0_s183 = []
    for v1_s183 in range(len(v2_s183)):
        if v3_s183(v2_s183[v1_s183]):
            v0_s183 = v0_s183 + [v2_s183[v1_s183]]
    return cfg

def step_414(cfg):
    v0_s414 = []
    for v1_s414 in range(len(v2_s414)):
        if v3_s414(v2_s414[v1_s414]):
            v0_s414 = v0_s414 + [v2_s414[v1_s414]]
    return cfg

def step_645(cfg):
    v0_s645 = []
    for v1_s645 in range(len(v2_s645)):
        if v3_s645(v2_s645[v1_s645]):
            v0_s645 = v0_s645 + [v2_s645[v1_s645]]
    return cfg

def step_876(cfg):
    v0_s876 = []
    for v1_s876 in range(len(v2_s876)):
        if v3_s876(v2_s876[v1_s876]):
            v0_s876 = v0_s876 + [v2_s876[v1_s876]]
    return cfg

def step_196(cfg):
    v0_s196 = []
    for v1_s196 in range(len(v2_s196)):
        v3_s196 = v2_s196[v1_s196]
        if v4_s196(v3_s196):
            v0_s196.append(v3_s196)
    return cfg

def step_427(cfg):
    v0_s427 = []
    for v1_s427 in range(len(v2_s427)):
        v3_s427 = v2_s427[v1_s427]
        if v4_s427(v3_s427):
            v0_s427.append(v3_s427)
    return cfg

def step_658(cfg):
    v0_s658 = []
    for v1_s658 in range(len(v2_s658)):
        v3_s658 = v2_s658[v1_s658]
        if v4_s658(v3_s658):
            v0_s658.append(v3_s658)
    return cfg

def step_889(cfg):
    v0_s889 = []
    for v1_s889 in range(len(v2_s889)):
        v3_s889 = v2_s889[v1_s889]
        if v4_s889(v3_s889):
            v0_s889.append(v3_s889)
    return cfg

def step_209(cfg):
    v0_s209 = []
    for v1_s209 in range(len(v2_s209)):
        if v3_s209(v2_s209[v1_s209]):
            v0_s209 += [v2_s209[v1_s209]]
    return cfg
